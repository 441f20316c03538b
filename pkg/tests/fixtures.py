# flake8: noqa

MU = 1.0
G = 1.0
K_EPS = 1e-6

STRIP_SPEC = {
    'bottom': 'GammaU1',
    'top': 'GammaU2',
    'left': 'GammaF',
    'right': 'GammaF',
}

FREE_SPEC = {
    'bottom': 'GammaF',
    'top': 'GammaF',
    'left': 'GammaF',
    'right': 'GammaF',
}

CLAMPED_SPEC = {
    'bottom': 'GammaU1',
    'top': 'GammaU1',
    'left': 'GammaU1',
    'right': 'GammaU1',
}

SCENARIO_MINIMAL = '''
[grid]
nx = 5
ny = 9
lx = 0.5
ly = 1

[material]
mu = 1
G = 1

[load]
T = 0.2
s = 10
'''

SCENARIO_FULL = '''
[grid]
nx = 5
ny = 5
lx = 1
ly = 1

[boundary]
bottom = GammaU1
top = GammaU2
left = GammaF
right = GammaF

[material]
mu = 2
G = 0.5
E = 5
Sigma = 0.75
cap_C = 20
eps = 0.5
k_eps = 1e-5

[load]
delta = 2
T = 0.3
s = 10
GammaU1 = 0:0
GammaU2 = 0:0 1:delta

[model]
name = improved
lambda = 0.5
multistart = false
stop_at_separation = true
perturbation = 0.1

[output]
dir = results
snapshot_stride = 2
'''

SCENARIO_NO_G = '''
[grid]
nx = 5
ny = 5
lx = 1
ly = 1

[material]
mu = 1

[load]
T = 1
s = 10
'''

SCENARIO_NEGATIVE_EPS = SCENARIO_MINIMAL.replace('G = 1\n', 'G = 1\neps = -0.1\n')

SCENARIO_VISCOUS = '''
[grid]
nx = 5
ny = 5
lx = 1
ly = 1

[material]
mu = 1
G = 10

[load]
T = 0.2
s = 10
delta = 0.1

[model]
name = viscous
lambda = 1
perturbation = 0.05
'''

# 2D state with la_sup = 0.5: traction (2, 0) on the normal (1, 0) and
# F e_y = (0.25, 0)
SIGMA_2D = [[2.0, 0.0], [0.0, 0.0]]
F_2D = [[0.0, 0.25], [0.0, 0.0]]
NORMAL_2D = [1.0, 0.0]
LA_2D = 0.5
