# Setup script for pyresonance.

import os
import sys

from setuptools import setup

thisdir = os.path.dirname(os.path.abspath(__file__))


def read_pkginfo(dirname, infofile="pkginfo.py"):
    """
    Read python package information.

    Avoids importing the package, since that needs its requirements
    installed before setup has run.
    """

    info = {}
    with open(os.path.join(thisdir, dirname, infofile)) as fp:
        exec(fp.read(), info)

    return info


def read_requirements(name):
    "Read a requirements list from the conf directory."

    with open(os.path.join(thisdir, "conf", name)) as fp:
        return [line.strip() for line in fp
                if line.strip() and not line.startswith("#")]


info = read_pkginfo("resonance")

# Build setup requirements.
setup_requires = []

if {'pytest', 'test', 'ptr'}.intersection(sys.argv):
    setup_requires.append('pytest-runner')

# Find the README for long description.
readme = os.path.join(thisdir, "README")

# Do the setup.
setup(name             = info["__title__"],
      version          = info["__version__"],
      author           = info["__author__"],
      author_email     = info["__email__"],
      description      = info["__desc__"],
      long_description = "\n" + open(readme).read(),
      url              = info["__url__"],
      classifiers      = info["__classifiers__"].strip().split("\n"),
      license          = info["__license__"],
      packages         = ["resonance"],
      python_requires  = ">=3.6",
      setup_requires   = setup_requires,
      install_requires = read_requirements("requirements.txt"),
      tests_require    = read_requirements("tests.txt"),
      entry_points     = {"console_scripts":
                          ["resonance = resonance.cli:main"]})

# flake8: noqa
