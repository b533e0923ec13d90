"""
This module parses net documents.

The format is line oriented; '#' starts a comment:

    place NAME [initial | final]
    trans NAME : bag -> bag

where a bag is a possibly empty comma separated list of [NAT "*"] NAME.
"""

import re

from wfsound.common.utils.exception import WfsoundError, ERR
from wfsound.net.petri_net import PetriNet
from wfsound.net.workflow_net import validate_workflow


TOKEN_RE = re.compile(r"\s*(?:(?P<arrow>->)|(?P<nat>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_']*)|(?P<punct>[:,*])|(?P<bad>\S))")


class NetDocument(object):
    """
    A parsed net with its optional designations.
    """
    def __init__(self, net, initial=None, final=None):
        self.net = net
        self.initial = initial
        self.final = final

    def to_workflow(self):
        """
        Validate the designated workflow net.
        """
        if self.initial is None or self.final is None:
            raise WfsoundError(ERR.invalid_argument, "The document needs an initial and a final place.")
        return validate_workflow(self.net, self.initial, self.final)


class NetReader(object):
    """
    Reads a net document statement by statement.

    Iterating yields ("place", name, designation, line) and
    ("trans", name, pre, post, line) tuples.
    """
    def __init__(self, text):
        """
        Args:
            text: (str or file) the document.
        """
        if not isinstance(text, str):
            text = text.read()
        self.lines = text.splitlines()
        self.line_no = 0

    def __iter__(self):
        return self

    def __next__(self):
        return self.readln()

    def readln(self):
        """
        Read the next statement, skipping blank and comment lines.
        """
        while self.line_no < len(self.lines):
            self.line_no += 1
            line = self.lines[self.line_no - 1].split("#")[0]
            tokens = self._tokenize(line)
            if tokens:
                return self._statement(tokens)

        # No data.
        raise StopIteration

    def _error(self, message, column):
        return WfsoundError(ERR.parse_error, "line %s, column %s: %s" % (self.line_no, column, message),
                            data={"line": self.line_no, "column": column})

    def _tokenize(self, line):
        tokens = []
        pos = 0
        while pos < len(line):
            match = TOKEN_RE.match(line, pos)
            if not match or match.end() == pos:
                break
            kind = match.lastgroup
            column = match.start(kind) + 1
            if kind == "bad":
                raise self._error("unexpected character %r" % match.group(kind), column)
            value = match.group(kind)
            if kind == "punct":
                kind = value
            tokens.append((kind, value, column))
            pos = match.end()
        return tokens

    def _statement(self, tokens):
        kind, value, column = tokens[0]
        if kind != "name" or value not in ("place", "trans"):
            raise self._error("expected 'place' or 'trans'", column)

        if len(tokens) < 2 or tokens[1][0] != "name":
            raise self._error("expected a name", tokens[1][2] if len(tokens) > 1 else column)
        name = tokens[1][1]

        if value == "place":
            designation = None
            if len(tokens) >= 3:
                kind, word, column = tokens[2]
                if kind != "name" or word not in ("initial", "final"):
                    raise self._error("expected 'initial' or 'final'", column)
                designation = word
            if len(tokens) > 3:
                raise self._error("unexpected %r" % tokens[3][1], tokens[3][2])
            return "place", name, designation, self.line_no

        if len(tokens) < 3 or tokens[2][0] != ":":
            raise self._error("expected ':'", tokens[2][2] if len(tokens) > 2 else tokens[1][2])
        pre, pos = self._bag(tokens, 3)
        if pos >= len(tokens) or tokens[pos][0] != "arrow":
            raise self._error("expected '->'", tokens[pos][2] if pos < len(tokens) else tokens[-1][2])
        post, pos = self._bag(tokens, pos + 1)
        if pos < len(tokens):
            raise self._error("unexpected %r" % tokens[pos][1], tokens[pos][2])
        return "trans", name, pre, post, self.line_no

    def _bag(self, tokens, pos):
        """
        Parse a bag starting at pos. Returns the bag as a list of
        (place, weight, column) and the position after it.
        """
        items = []
        if pos >= len(tokens) or tokens[pos][0] not in ("name", "nat"):
            return items, pos

        while True:
            weight = 1
            kind, value, column = tokens[pos] if pos < len(tokens) else (None, None, tokens[-1][2])
            if kind == "nat":
                weight = int(value)
                if weight == 0:
                    raise WfsoundError(ERR.invalid_weight, "line %s, column %s: weight 0" % (self.line_no, column),
                                       data={"line": self.line_no, "column": column})
                if pos + 1 >= len(tokens) or tokens[pos + 1][0] != "*":
                    raise self._error("expected '*'", column)
                pos += 2
                kind, value, column = tokens[pos] if pos < len(tokens) else (None, None, tokens[-1][2])
            if kind != "name":
                raise self._error("expected a place name", column)
            items.append((value, weight, column))
            pos += 1
            if pos < len(tokens) and tokens[pos][0] == ",":
                pos += 1
                continue
            return items, pos


def parse_net(text):
    """
    Parse a net document.

    Args:
        text: (str or file) the document.

    Returns:
        NetDocument
    """
    reader = NetReader(text)
    places = []
    place_set = set()
    transitions = []
    pre = []
    post = []
    designations = {}

    for statement in reader:
        if statement[0] == "place":
            _, name, designation, line = statement
            if name in place_set or name in transitions:
                raise WfsoundError(ERR.duplicate_identifier, "line %s: duplicate identifier %s" % (line, name),
                                   data={"line": line, "name": name})
            places.append(name)
            place_set.add(name)
            if designation:
                if designation in designations:
                    raise WfsoundError(ERR.duplicate_designation, "line %s: second %s place" % (line, designation),
                                       data={"line": line, "name": name})
                designations[designation] = name
        else:
            _, name, t_pre, t_post, line = statement
            if name in place_set or name in transitions:
                raise WfsoundError(ERR.duplicate_identifier, "line %s: duplicate identifier %s" % (line, name),
                                   data={"line": line, "name": name})
            bags = []
            for bag in (t_pre, t_post):
                items = {}
                for place, weight, column in bag:
                    if place not in place_set:
                        raise WfsoundError(ERR.unknown_place,
                                           "line %s, column %s: unknown place %s" % (line, column, place),
                                           data={"line": line, "column": column, "place": place})
                    items[place] = items.get(place, 0) + weight
                bags.append(items)
            transitions.append(name)
            pre.append(bags[0])
            post.append(bags[1])

    net = PetriNet(places, transitions, pre, post)
    return NetDocument(net, designations.get("initial"), designations.get("final"))


def read_net_file(filename):
    """
    Parse a net document from a file.
    """
    with open(filename, "r", encoding="utf-8") as f:
        return parse_net(f.read())
