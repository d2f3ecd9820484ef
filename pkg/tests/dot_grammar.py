"""A strict validator for the undirected-DOT subset the emitter produces.

Recursive descent over: graph ID? { (node_stmt | edge_stmt)* } with
quoted-string or bareword IDs and [k=v, ...] attribute lists.  Raises
DotSyntaxError on anything malformed, including broken quoting.
"""

import re


class DotSyntaxError(ValueError):
    pass


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<quoted>"(?:[^"\\]|\\.)*")
      | (?P<bare>[A-Za-z_][A-Za-z0-9_]*|-?(?:\.\d+|\d+(?:\.\d*)?))
      | (?P<edgeop>--)
      | (?P<punct>[{}\[\];=,])
    )""",
    re.VERBOSE,
)


def _lex(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise DotSyntaxError(f"unreadable input at offset {pos}: {text[pos:pos+20]!r}")
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


class _Parser:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        k, v = self.peek()
        if k is None:
            raise DotSyntaxError("unexpected end of input")
        if kind is not None and k != kind:
            raise DotSyntaxError(f"expected {kind}, got {k} {v!r}")
        if value is not None and v != value:
            raise DotSyntaxError(f"expected {value!r}, got {v!r}")
        self.i += 1
        return v

    def take_id(self):
        k, v = self.peek()
        if k not in ("quoted", "bare"):
            raise DotSyntaxError(f"expected an ID, got {k} {v!r}")
        self.i += 1
        return v

    def parse_graph(self):
        if self.take("bare") != "graph":
            raise DotSyntaxError("must start with 'graph'")
        k, _ = self.peek()
        if k in ("quoted", "bare"):
            self.take_id()
        self.take("punct", "{")
        while self.peek() != ("punct", "}"):
            self.parse_statement()
        self.take("punct", "}")
        if self.peek()[0] is not None:
            raise DotSyntaxError("trailing content after closing brace")

    def parse_statement(self):
        self.take_id()
        k, v = self.peek()
        if (k, v) == ("edgeop", "--"):
            self.take("edgeop")
            self.take_id()
        if self.peek() == ("punct", "["):
            self.parse_attrs()
        self.take("punct", ";")

    def parse_attrs(self):
        self.take("punct", "[")
        while True:
            self.take_id()
            self.take("punct", "=")
            self.take_id()
            k, v = self.peek()
            if (k, v) == ("punct", ","):
                self.take("punct")
                continue
            break
        self.take("punct", "]")


def validate_dot(text: str) -> None:
    """Raise DotSyntaxError unless `text` is a well-formed undirected graph."""
    _Parser(_lex(text)).parse_graph()
