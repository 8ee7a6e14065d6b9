#!/usr/bin/env python

import sys

from setuptools import setup

if __name__ == '__main__':

    summary = 'Exact enumeration and counting of regular tetrahedra with vertices in {0..n}^3 (OEIS A103158), from the solutions of a^2+b^2+c^2=3d^2'
    try:
        with open('README.rst', 'rt') as f:
            long_description = f.read()
    except Exception as e:
        sys.stderr.write('Error reading description: %s\n' %(str(e),))
        long_description = summary

    setup(name='latticetetra',
        version='1.0.0',
        packages=['LatticeTetra', 'LatticeTetra.fields'],
        install_requires=['sympy', 'QueryableList'],
        requires=['sympy', 'QueryableList'],
        provides=['latticetetra'],
        entry_points={
            'console_scripts' : [
                'latticetetra = LatticeTetra.cli:main',
            ],
        },
        keywords=['lattice', 'tetrahedron', 'regular', 'OEIS', 'A103158', 'diophantine', 'sum of three squares', 'eisenstein', 'enumeration'],
        long_description=long_description,
        license='LGPLv2',
        description=summary,
        python_requires='>=3.8',
        classifiers=['Development Status :: 4 - Beta',
            'Programming Language :: Python',
            'License :: OSI Approved :: GNU Lesser General Public License v2 (LGPLv2)',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',
            'Programming Language :: Python :: 3.11',
            'Topic :: Scientific/Engineering :: Mathematics',
            'Topic :: Software Development :: Libraries :: Python Modules',
        ]

    )

#vim: set ts=4 sw=4 expandtab
