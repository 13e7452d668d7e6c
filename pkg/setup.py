from setuptools import setup, find_packages

from tripoly import __version__

setup(
    name="tripoly",
    version=__version__,
    packages=find_packages(exclude=["tests", "tests.*"]),
    python_requires=">=3.9",
    install_requires=["colorama", "numpy", "ply", "pyyaml", "ujson"],
    entry_points={
        "console_scripts": [
            "tripoly = tripoly.run_tripoly:main",
        ]
    },
)
