# Configuration file for the Sphinx documentation builder.
import os
import sys
sys.path.insert(0, os.path.abspath('../../'))

# -- Project information -----------------------------------------------------

project = 'pdgcalc'
copyright = '2026, pdgcalc developers'
author = 'pdgcalc developers'

version = ''
release = '0.1'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['**/test']
pygments_style = None

# Google style Args/Returns blocks and the older :param: fields both occur
napoleon_google_docstring = True
napoleon_use_param = True
autodoc_member_order = 'bysource'

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'pdgcalcdoc'

# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'pdgcalc', 'pdgcalc Documentation', [author], 1)
]
