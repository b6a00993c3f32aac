# -*- coding: utf-8 -*-
#
# ecplast documentation build configuration file.
import os
import sys
import json

sys.path.insert(0, os.path.abspath('../'))

# -- General configuration ------------------------------------------------
extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'ecplast'
copyright = '2026, The ecplast developers'
version = '0.1'
release = version

exclude_patterns = ['_*']
pygments_style = 'sphinx'

# -- Options for HTML output ----------------------------------------------
html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'ecplastdoc'

man_pages = [
    ('index', 'ecplast', 'ecplast Documentation',
     ['The ecplast developers'], 1)
]

# -- Dump the JSON schemas of the file formats ------------------------------
import ecplast.schemas

try:
    dir_name = 'json_schemas'
    os.mkdir(dir_name)
except FileExistsError:
    pass

for name in ('FiniteMetricSpace', 'PointMap', 'GeneratorRecipe', 'MonotoneGauge'):
    fname = os.path.join(dir_name, '{}.json'.format(name))
    with open(fname, 'w') as fd:
        fd.write(json.dumps(getattr(ecplast.schemas, name), indent=2))
