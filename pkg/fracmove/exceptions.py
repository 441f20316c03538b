class FractureException(Exception):
    pass


class ValidationError(FractureException):
    pass


class NonSquareCells(ValidationError):

    def __init__(self, hx, hy):
        super(NonSquareCells, self).__init__(
            'Grid cells are not square: h_x={} differs from h_y={}'
            .format(hx, hy))
        self.hx = hx
        self.hy = hy


class TooSmall(ValidationError):

    def __init__(self, nx, ny):
        super(TooSmall, self).__init__(
            'Grid needs at least 3 nodes per axis, got {}x{}'.format(nx, ny))


class UnlabeledEdge(ValidationError):

    def __init__(self, edges):
        super(UnlabeledEdge, self).__init__(
            'Boundary edges without a label: {}'.format(', '.join(edges)))
        self.edges = edges


class GridMismatch(ValidationError):
    pass


class InvalidField(ValidationError):
    pass


class InvalidMaterial(ValidationError):
    pass


class BadNormal(ValidationError):

    def __init__(self, norm):
        super(BadNormal, self).__init__(
            'Normal vector must have unit length, got |n|={}'.format(norm))


class EmptyCandidate(ValidationError):
    pass


class NonZeroTrace(ValidationError):
    pass


class ContourOutOfDomain(ValidationError):

    def __init__(self, radius, distance):
        super(ContourOutOfDomain, self).__init__(
            'Contour of radius {} leaves the domain (tip is {} away from '
            'the boundary)'.format(radius, distance))


class TipOutsideDomain(ValidationError):
    pass


class TraceTooShort(ValidationError):

    def __init__(self, length, required=3):
        super(TraceTooShort, self).__init__(
            'Trace has {} entries, at least {} are required'
            .format(length, required))


class ConfigError(ValidationError):
    pass


class MissingKey(ConfigError):

    def __init__(self, key):
        super(MissingKey, self).__init__('Missing key: {}'.format(key))
        self.key = key


class BadValue(ConfigError):

    def __init__(self, key, reason):
        super(BadValue, self).__init__(
            'Bad value for {}: {}'.format(key, reason))
        self.key = key
        self.reason = reason


class IoError(ConfigError):

    def __init__(self, path, reason):
        super(IoError, self).__init__(
            'Can not read {}: {}'.format(path, reason))
        self.path = path


class SolverError(FractureException):
    pass


class SolverDiverged(SolverError):

    def __init__(self, iterations):
        super(SolverDiverged, self).__init__(
            'Conjugate gradient did not converge in {} iterations'
            .format(iterations))
        self.iterations = iterations


class SingularSystem(SolverError):
    pass


class NoConvergence(SolverError):

    def __init__(self, iterations, delta, step=None):
        msg = 'Alternate minimization stopped after {} iterations, ' \
              'last relative energy change {}'.format(iterations, delta)
        if step is not None:
            msg = 'Step {}: {}'.format(step, msg)
        super(NoConvergence, self).__init__(msg)

        self.iterations = iterations
        self.delta = delta
        self.step = step
