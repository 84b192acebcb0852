# copyright ############################### #
# This file is part of the Xcbo Package.    #
# ######################################### #

from setuptools import setup, find_packages
from pathlib import Path

#########
# Setup #
#########

version_file = Path(__file__).parent / 'xcbo/_version.py'
dd = {}
with open(version_file.absolute(), 'r') as fp:
    exec(fp.read(), dd)
__version__ = dd['__version__']

setup(
    name='xcbo',
    version=__version__,
    description='Test functions and a Bayesian optimizer for constrained black-box optimization benchmarks',
    long_description='Test functions and a Bayesian optimizer for constrained black-box optimization benchmarks',
    license='Apache 2.0',
    packages=find_packages(exclude=['tests']),
    package_data={'xcbo': ['default_config.yaml']},
    include_package_data=True,
    python_requires='>=3.9',
    install_requires=[
        'numpy>=1.22',
        'scipy>=1.7',
        'pandas',
        'pyyaml',
        ],
    extras_require={
        'tests': ['pytest'],
        },
    entry_points={
        'console_scripts': ['xcbo=xcbo.cli:main'],
        },
    )
