# fracmove documentation build configuration file.

import os

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'fracmove'
copyright = u'2026, fracmove developers'

exec(open(
    os.path.join(os.path.dirname(__file__), '../fracmove/_version.py')).read())
version = __version__  # noqa: defined by the exec above
release = __version__  # noqa

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
htmlhelp_basename = 'fracmovedoc'

latex_documents = [
    ('index', 'fracmove.tex', u'fracmove Documentation',
     u'fracmove developers', 'manual'),
]

man_pages = [
    ('index', 'fracmove', u'fracmove Documentation',
     [u'fracmove developers'], 1)
]
