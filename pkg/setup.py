from setuptools import setup, find_packages

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name="coinvariant-cohomology",
    version="0.1.0",
    author="coinv developers",
    description="Exact equivariant and coinvariant cohomology of cell complexes and periodic covers",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.12",
    ],
    python_requires=">=3.10",
    install_requires=[
        "sympy>=1.12",
        "pydantic>=2.5.3",
        "pydantic-settings>=2.1.0",
        "python-dotenv>=1.0.0",
        "loguru>=0.7.2",
        "click>=8.1.7",
    ],
    entry_points={
        "console_scripts": [
            "coinv=src.main:cli",
        ],
    },
    include_package_data=True,
    zip_safe=False,
)
