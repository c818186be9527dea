#!/usr/bin/env python

import os

from setuptools import find_packages, setup, Command


long_description = '''
**FastFib** is a library written in Python implementing Fibonacci coding of
positive integers with a fast table-driven decompression algorithm based on
segment mapping tables and the Fibonacci shift.

FastFib is distributed under the Apache Software License (Apache 2.0).
'''


class CleanCommand(Command):
    user_options = []

    def initialize_options(self):
        pass

    def finalize_options(self):
        pass

    def run(self):
        os.system('rm -vrf ./build ./dist ./*.pyc ./*.tgz ./*.egg-info')


# install requirements
install_requires = [
    'numpy>=1.17',
    'scikit-learn>=0.22',
]

# test requirements
tests_require = [
    'pytest',
    'coverage'
]


setup(
    name="fastfib",
    version="0.1.0",
    description="FastFib: Fast Fibonacci Decompression",
    long_description=long_description,
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    platforms="any",
    include_package_data=True,
    license="Apache Licence 2.0",
    cmdclass={'clean': CleanCommand},
    python_requires='>=3.7',
    install_requires=install_requires,
    extras_require={'test': tests_require},
    entry_points={'console_scripts': ['fastfib = fastfib.cli:main']},
    classifiers=[
        'Topic :: System :: Archiving :: Compression',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Topic :: Software Development :: Libraries',
        'Topic :: Software Development :: Libraries :: Python Modules',
        'Intended Audience :: Developers',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3']
    )
