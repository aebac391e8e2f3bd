"""
Package information.
"""

__title__ = "pyresonance"
__version__ = "0.1.0"
__desc__ = ("Homotopy continuation for radial solutions of the resonant "
            "exponential problem on the unit disk.")
__author__ = 'Glenn Hutchings'
__email__ = 'zondo42@gmail.com'
__license__ = 'LGPL v2 or later'
__copyright__ = "2026, " + __author__
__url__ = "http://pypi.python.org/pypi/pyresonance"

__classifiers__ = """
Development Status :: 4 - Beta
Environment :: Console
Intended Audience :: Science/Research
License :: OSI Approved :: GNU General Public License v2 or later (GPLv2+)
Natural Language :: English
Operating System :: POSIX :: Linux
Operating System :: Unix
Programming Language :: Python :: 3
Topic :: Scientific/Engineering :: Mathematics
"""
