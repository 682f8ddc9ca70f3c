#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# nashvop documentation build configuration file.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

import nashvop

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'nashvop'
copyright = u"2026, nashvop developers"
author = u"nashvop developers"

version = nashvop.__version__
release = nashvop.__version__

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

autodoc_member_order = 'bysource'

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'nashvopdoc'

latex_documents = [
    (master_doc, 'nashvop.tex', u'nashvop Documentation', author, 'manual'),
]

man_pages = [
    (master_doc, 'nashvop', u'nashvop Documentation', [author], 1)
]

texinfo_documents = [
    (master_doc, 'nashvop', u'nashvop Documentation', author, 'nashvop',
     'Exact Nash equilibrium sets of linear games.', 'Miscellaneous'),
]
