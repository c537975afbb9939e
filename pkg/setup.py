"""Setup script for the hyperconf toolkit"""
from setuptools import find_packages, setup

setup(
    name="hyperconf-toolkit",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    include_package_data=True,
    entry_points={"console_scripts": ["hyperconf = hyperconf.cli:main"]},
)
