"""
The run configuration.
"""

from .continuation import ContinuationConfig
from .forcing import ForcingSpec
from .parser import nest, parse_file
from .schema import validate
from .utils import SortedDict, fmt


class RunConfig(SortedDict):
    """
    A validated run configuration.
    """

    def __init__(self, **kw):
        super(RunConfig, self).__init__(validate(kw))
        self.sort()

    @staticmethod
    def load(path=None, overrides=None):
        """
        Read a configuration file and apply flag overrides.

        Args:
            path: Configuration file, or None for defaults only.
            overrides: Dict of dotted keys to values; None values are
                skipped.

        Returns:
            The validated RunConfig.
        """

        data = parse_file(path) if path else {}
        for key, value in sorted((overrides or {}).items()):
            if value is not None:
                nest(data, key, value)

        return RunConfig(**data)

    @property
    def grid_size(self):
        return self["n"]

    @property
    def seed(self):
        return self["seed"]

    @property
    def epsilon_g(self):
        return self["epsilon_g"]

    @property
    def out(self):
        return self["out"]

    @property
    def forcing(self):
        return ForcingSpec(**self["forcing"])

    @property
    def continuation(self):
        return ContinuationConfig(**self["continuation"])

    @property
    def scan(self):
        return self["scan"]

    @property
    def comparison(self):
        return self["comparison"]

    def write(self, fp):
        "Write the configuration back out in configuration file syntax."

        for key, value in self.items():
            if not isinstance(value, dict):
                fp.write("%s = %s\n" % (key, _value(value)))

        for name, entries in self.items():
            if not isinstance(entries, dict):
                continue

            fp.write("\n[%s]\n" % name)
            for key in sorted(entries):
                if entries[key] == []:
                    continue

                fp.write("%s = %s\n" % (key, _value(entries[key])))

    def __repr__(self):
        return "<RunConfig: n=%d>" % self.grid_size


def _value(value):
    if isinstance(value, list):
        return ", ".join(_value(v) for v in value)

    if isinstance(value, str):
        return '"%s"' % value.replace('"', r'\"')

    return fmt(value)
