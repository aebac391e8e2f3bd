"""
Run configuration validation schema.
"""

from voluptuous import (Schema, Required, Optional, All, Range, Length,
                        Coerce, In, MultipleInvalid)
from six import text_type as text

from .errors import ConfigError
from .forcing import FAMILIES
from .grid import MIN_NODES


def validate(data):
    """
    Check data is a valid run configuration and fill in defaults.

    All problems are collected and raised together as one ConfigError.
    """

    try:
        data = run(data)
    except MultipleInvalid as e:
        problems = [describe(err) for err in e.errors]
    else:
        problems = list(cross_checks(data))

    if problems:
        raise ConfigError("invalid configuration:\n  " +
                          "\n  ".join(sorted(problems)))

    return data


def describe(err):
    path = '.'.join(map(str, err.path))
    return "%s: %s" % (path, err.msg)


def cross_checks(data):
    "Yield problems involving more than one setting."

    cont = data['continuation']
    if not (cont['min_step'] <= cont['initial_step'] <= cont['max_step']
            <= 1.0):
        yield ("continuation: need min_step <= initial_step <= max_step "
               "<= 1")

    masses = data['scan']['masses']
    if any(m <= 0 for m in masses):
        yield "scan.masses: masses must be positive"

    if masses != sorted(masses):
        yield "scan.masses: masses must be sorted"

    forcing = data['forcing']
    if forcing['family'] == 'from-file' and not forcing['file']:
        yield "forcing.file: required for the from-file family"

    if forcing['family'] == 'polynomial' and not forcing['coefficients']:
        yield "forcing.coefficients: required for the polynomial family"


def as_list(value):
    return value if isinstance(value, list) else [value]


Real = Coerce(float)
Positive = All(Real, Range(min=0, min_included=False))


forcing = Schema({Required('family', default='eigenfunction'): In(FAMILIES),
                  Optional('amplitude'): Real,
                  Required('center', default=0.0): Real,
                  Required('width', default=0.5): Positive,
                  Required('coefficients', default=[]): All(as_list, [Real]),
                  Required('file', default=""): text,
                  Optional('target_mass'): Real})


continuation = Schema({Required('initial_step', default=0.05): Positive,
                       Required('min_step', default=1e-6): Positive,
                       Required('max_step', default=0.1): Positive,
                       Required('newton_tol', default=1e-10): Positive,
                       Required('blowup_cap', default=1e4): Positive,
                       Required('growth', default=2.0): All(Real,
                                                            Range(min=1)),
                       Required('shrink', default=0.5):
                       All(Real, Range(min=0, max=1, min_included=False,
                                       max_included=False))})


scan = Schema({Required('masses', default=[1.0, 4.0, 8.0, 12.0]):
               All(as_list, [Real], Length(min=1)),
               Required('margin', default=0.5): All(Real, Range(min=0)),
               Required('workers', default=1): All(int, Range(min=1))})


comparison = Schema({Required('starts', default=20): All(int, Range(min=1)),
                     Required('amplitude', default=3.0): Positive})


run = Schema({Required('n', default=512): All(int, Range(min=MIN_NODES)),
              Required('seed', default=0): All(int, Range(min=0)),
              Required('epsilon_g', default=1.0): Positive,
              Required('out', default="."): text,
              Required('forcing', default={}): forcing,
              Required('continuation', default={}): continuation,
              Required('scan', default={}): scan,
              Required('comparison', default={}): comparison})
