from setuptools import find_packages, setup

setup(
    name='tangentcone',
    version='0.1.0',
    description='Exact tangent cone, intersection multiplicity and algebra-scheme obstruction computations',
    packages=find_packages(exclude=('tests', 'tests.*')),
    python_requires='>=3.9',
    install_requires=[
        'click>=8.1',
        'marshmallow>=3.13',
        'python-dotenv>=1.0',
        'rich>=13.0',
        'sympy>=1.12',
    ],
    entry_points={
        'console_scripts': [
            'tangentcone=run:main',
        ],
    },
    py_modules=['run'],
)
