# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

from setuptools import setup, find_packages

setup(
    name='natrep',
    version='0.0.1',
    description='Exact natural-representation codec for rational numbers, its tree, word calculus and benchmarks',
    packages=find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    package_data={'natrep.configs': ['*.json']},
    python_requires='>=3.8',
    install_requires=[
        'importlib-resources>=5.12.0',
        'pandas>=2.0.2',
        'tqdm',
    ],
    extras_require={
        'test': [
            'hypothesis',
            'pytest',
            'pytest-benchmark',
        ],
    },
    entry_points={
        'console_scripts': [
            'natrep=natrep.interface.cli:main',
        ],
    },
)
