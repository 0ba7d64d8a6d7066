#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# hilfer-hadamard-bvp documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import datetime
import sys
import os

# Insert the project root dir as the first element in the PYTHONPATH.
# This lets us ensure that the source package is imported, and that its
# version is used.
directory = os.path.dirname(os.path.abspath(__file__))
sys.path.append(os.path.abspath(os.path.join(directory, '../')))

import hhbvp  # noqa: E402

# -- General configuration ---------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx_click.ext',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

# General information about the project.
project = u'hilfer-hadamard-bvp'
copyright = u"%i, hhbvp developers" % datetime.date.today().year

# The short X.Y version.
version = hhbvp.__version__
# The full version, including alpha/beta/rc tags.
release = hhbvp.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'scipy': ('https://docs.scipy.org/doc/scipy/', None),
}

# -- Options for HTML output -------------------------------------------

html_theme = os.environ.get('HTML_THEME', 'alabaster')
html_theme_options = {
    'description': 'Solve and certify Hilfer-Hadamard fractional boundary value problems',
    'github_user': 'hhbvp',
    'github_repo': 'hilfer-hadamard-bvp',
    'github_type': 'star',
}
html_static_path = []
htmlhelp_basename = 'hilfer-hadamard-bvpdoc'

# -- Options for LaTeX output ------------------------------------------

latex_elements = {
    'papersize': 'a4paper',
    'pointsize': '10pt',
    'preamble': '',
}
latex_documents = [
    ('index', 'hilfer-hadamard-bvp.tex', u'hilfer-hadamard-bvp Documentation', u'hhbvp developers', 'manual'),
]

# -- Options for manual page output ------------------------------------

man_pages = [
    ('index', 'hhbvp', u'hilfer-hadamard-bvp Documentation', [u'hhbvp developers'], 1)
]
