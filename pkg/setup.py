"""Setup KOSTKA."""
from setuptools import find_packages
from setuptools import setup

setup(
    name="KOSTKA",
    version="1.0",
    description="""Package for level-restricted generalized Kostka polynomials, their path,
    tableau, rigged configuration and fermionic formulas, and affine branching functions""",
    long_description=open("README.md", "r").read(),
    long_description_content_type="text/markdown",
    install_requires=[
        "matplotlib",
        "pandas",
        "numpy",
        "scipy",
        "sympy",
        "networkx",
        "pyyaml",
        "tqdm",
        "click",
    ],
    extras_require={"all": ["pytest", "pytest-cov"]},
    packages=find_packages(exclude=["tests"]),
    include_package_data=True,
    package_data={"KOSTKA": ["default_params.yaml"]},
    entry_points={"console_scripts": ["kostka = KOSTKA.cli:cli"]},
)
