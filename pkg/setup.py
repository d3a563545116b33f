#!/usr/bin/env python3

from setuptools import setup, find_packages

setup(
    name="gan-gan",
    version="0.1.0",
    description="Train a fleet of MNIST GANs, then a GAN over their parameter snapshots",
    author="",
    author_email="",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    install_requires=[
        "numpy>=1.22",
        "python-dotenv>=1.0.0",
        "pydantic>=2.4.2",
        "rich>=13.6.0",
        "typer>=0.9.0,<0.26",
        "click>=8.0",
        "pyyaml>=6.0.1",
        "packaging>=23.0",
    ],
    extras_require={
        "png": ["matplotlib>=3.5"],
        "dev": ["pytest>=7.4.0", "pytest-cov>=4.1.0", "ruff>=0.1.2"],
    },
    entry_points={
        "console_scripts": [
            "gan-gan=gan_gan.__main__:main",
        ],
    },
    python_requires=">=3.9",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)
