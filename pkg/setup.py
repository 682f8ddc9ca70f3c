#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = ['Click>=7.0', 'numpy>=1.16', 'pandas>=0.24', 'pycddlib>=2.1,<3.0', 'sympy>=1.4']

setup_requirements = [ ]

test_requirements = ['hypothesis>=4.0', ]

setup(
    author="nashvop developers",
    author_email='nashvop@users.noreply.github.com',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    description="Exact Nash equilibrium sets of linear games with vector payoffs and generalized constraints.",
    entry_points={
        'console_scripts': [
            'nashvop=nashvop.cli:main',
        ],
    },
    install_requires=requirements,
    license="Apache Software License 2.0",
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    keywords='nash equilibrium, vector optimization, polytopes, exact arithmetic',
    name='nashvop',
    packages=find_packages(include=['nashvop', 'nashvop.*']),
    package_data={'nashvop': ['games/*.json', 'games/expected/*.json']},
    python_requires='>=3.6',
    setup_requires=setup_requirements,
    test_suite='tests',
    tests_require=test_requirements,
    version='0.1.0',
    zip_safe=False,
)
