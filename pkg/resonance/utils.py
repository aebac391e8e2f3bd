"""
Various utilities.
"""

import errno
import os

from collections import OrderedDict
from functools import total_ordering


@total_ordering
class SortedDict(OrderedDict):
    """
    An ordered dictionary which allows sorting of keys in-place.
    """

    def __init__(self, *args, **kw):
        super(SortedDict, self).__init__(*args, **kw)

    def __lt__(self, other):
        return list(self.items()) < list(other.items())

    def sort(self):
        items = [(k, v) for (k, v) in self.items()]
        self.clear()
        self.update(sorted(items))


def fmt(value):
    "Format a number with 17 significant digits."

    if isinstance(value, bool):
        return str(value).lower()

    if isinstance(value, int):
        return str(value)

    return "%.17g" % value


def output_path(directory, name):
    "Return directory/name, creating the directory if needed."

    if not directory:
        directory = os.curdir

    try:
        os.makedirs(directory)
    except OSError as e:
        if e.errno != errno.EEXIST:
            raise

    return os.path.join(directory, name)
