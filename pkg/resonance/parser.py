"""
The run configuration file parser.

A configuration file holds 'key = value' entries, one per line.  A value
is a number, a quoted string or a bare word; comma-separated values make a
list.  A '[section]' header prefixes the keys that follow it, and dotted
keys nest, so

    [forcing]
    family = gaussian-bump

and 'forcing.family = gaussian-bump' are the same entry.  Comments start
with ';' or '#'.
"""

import re

from pyparsing import (Regex, QuotedString, Word, Suppress, Group,
                       ZeroOrMore, ParseException, delimitedList, alphas,
                       alphanums)

from .errors import ConfigError


def parse(text):
    "Parse configuration text into a nested dict."

    try:
        results = grammar().parseString(text, parseAll=True)
    except ParseException as e:
        raise ConfigError("line %d, column %d: %s" % (e.lineno, e.col, e.msg))

    data = {}
    prefix = ""
    for item in results:
        if "section" in item:
            prefix = item.section + "."
            continue

        values = list(item["values"])
        value = values[0] if len(values) == 1 else values
        nest(data, prefix + item.key, value)

    return data


def parse_file(path):
    "Parse a configuration file."

    try:
        with open(path) as fp:
            text = fp.read()
    except (IOError, OSError) as e:
        raise ConfigError("%s: %s" % (path, e.strerror or e))

    try:
        return parse(text)
    except ConfigError as e:
        raise ConfigError("%s: %s" % (path, e))


def nest(data, key, value):
    "Store value in data under a dotted key."

    parts = key.split(".")
    for part in parts[:-1]:
        sub = data.setdefault(part, {})
        if not isinstance(sub, dict):
            raise ConfigError("'%s' is both a value and a section" % part)

        data = sub

    data[parts[-1]] = value


def grammar():
    """
    Construct the configuration grammar.
    """

    EQ = Suppress("=")
    LB, RB = map(Suppress, "[]")

    def make_number(t):
        text = t[0]
        if re.match(r"^[+-]?\d+$", text):
            return int(text)

        return float(text)

    # Values.
    number = Regex(r"[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?(?![\w./~-])")
    number.setParseAction(make_number)

    string = QuotedString(quoteChar='"', escChar='\\')
    word = Word(alphanums + "_-./~:+")

    value = number | string | word

    # Entries and section headers.
    key = Word(alphas + "_", alphanums + "_-.")
    entry = Group(key("key") + EQ + Group(delimitedList(value))("values"))
    section = Group(LB + key("section") + RB)

    config = ZeroOrMore(section | entry)

    # Define comment syntax.
    comment = Regex(r"[;#].*")
    config.ignore(comment)

    return config
