"""Setup file for the taxicab-forge project"""
from setuptools import setup, find_packages

setup(
    name="taxicab-forge",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    install_requires=[
        # Dependencies from requirements.txt
        "python-dotenv>=1.0.0",
        "pydantic>=2.9.0",
        "click>=8.1.0",
        "numpy>=1.26.0",
        "sympy>=1.12",
    ],
    entry_points={
        "console_scripts": [
            "taxicab-forge=src.cli:cli",
        ],
    },
    python_requires=">=3.11",
)
