"""This module parses near-edge expressions like ``koch(flip(ccvx(2)), 3)``.

Names are case-insensitive and whitespace is ignored, except inside the file name of
``pts(<file>)``. The lexer and parser are built with ply.

"""

import os
import re
from typing import Optional

from ply import lex, yacc

from tripoly.geometry.exceptions import PointFileError
from tripoly.geometry.point_set import read_point_file
from tripoly.nearedge.exceptions import ExpressionFileError, ExpressionSyntaxError
from tripoly.nearedge.expression import (
    E,
    Cccv,
    Ccvx,
    Flip,
    Koch,
    Leaf,
    NearEdgeExpression,
    PolyChain,
    TwinChain,
    Vee,
    Wedge,
)

_RESERVED = {
    "e": "E",
    "vee": "VEE",
    "wedge": "WEDGE",
    "flip": "FLIP",
    "ccvx": "CCVX",
    "cccv": "CCCV",
    "koch": "KOCH",
    "poly": "POLY",
    "twin": "TWIN",
}

_BINARY = {"vee": Vee, "wedge": Wedge}
_CHAINS = {"ccvx": Ccvx, "cccv": Cccv}
_REPEATED = {"koch": Koch, "poly": PolyChain, "twin": TwinChain}


# pylint: disable=invalid-name,no-self-use
class ExpressionParser:
    """Parser of the near-edge expression grammar.

    Parameters
    ----------
    base_directory : str, optional
        Directory that relative file names of ``pts(<file>)`` are resolved against.

    """

    tokens = tuple(_RESERVED.values()) + (
        "NAME",
        "PTS",
        "PATH",
        "NUMBER",
        "LPAREN",
        "RPAREN",
        "COMMA",
    )
    states = (("path", "exclusive"),)

    t_ignore = " \t\r\n"
    t_LPAREN = r"\("
    t_COMMA = r","
    t_path_ignore = ""
    t_path_PATH = r"[^)]+"

    def __init__(self, base_directory: Optional[str] = None):
        self._base_directory = base_directory
        self._text = ""
        self._lexer = lex.lex(
            module=self, reflags=re.VERBOSE | re.IGNORECASE, errorlog=lex.NullLogger()
        )
        self._parser = yacc.yacc(
            module=self, write_tables=False, debug=False, errorlog=yacc.NullLogger()
        )

    def parse(self, text: str) -> NearEdgeExpression:
        """Parse an expression.

        Raises
        ------
        ExpressionSyntaxError
            If text is not a well-formed expression; the offset is 1-based.
        ExpressionFileError
            If a point file can not be read.

        """
        self._text = text
        self._lexer.begin("INITIAL")
        return self._parser.parse(text, lexer=self._lexer)

    def _syntax_error(self, position: int, reason: str) -> ExpressionSyntaxError:
        return ExpressionSyntaxError(self._text, position + 1, reason)

    def t_PTS(self, t):
        r"pts\s*\("
        t.lexer.begin("path")
        return t

    def t_NAME(self, t):
        r"[a-z_]+"
        name = t.value.lower()
        if name not in _RESERVED:
            raise self._syntax_error(t.lexpos, f"unknown name '{t.value}'")
        t.type = _RESERVED[name]
        t.value = name
        return t

    def t_NUMBER(self, t):
        r"\d+"
        t.value = int(t.value)
        return t

    def t_RPAREN(self, t):
        r"\)"
        return t

    def t_path_RPAREN(self, t):
        r"\)"
        t.lexer.begin("INITIAL")
        return t

    def t_error(self, t):
        raise self._syntax_error(t.lexpos, f"illegal character '{t.value[0]}'")

    def t_path_error(self, t):
        raise self._syntax_error(t.lexpos, f"illegal character '{t.value[0]}'")

    def p_expression_primitive(self, p):
        "expression : E"
        p[0] = E

    def p_expression_binary(self, p):
        """expression : VEE LPAREN expression COMMA expression RPAREN
        | WEDGE LPAREN expression COMMA expression RPAREN"""
        p[0] = _BINARY[p[1]](p[3], p[5])

    def p_expression_flip(self, p):
        "expression : FLIP LPAREN expression RPAREN"
        p[0] = Flip(p[3])

    def p_expression_chain(self, p):
        """expression : CCVX LPAREN NUMBER RPAREN
        | CCCV LPAREN NUMBER RPAREN"""
        p[0] = _CHAINS[p[1]](p[3])

    def p_expression_repeated(self, p):
        """expression : KOCH LPAREN expression COMMA NUMBER RPAREN
        | POLY LPAREN expression COMMA NUMBER RPAREN
        | TWIN LPAREN expression COMMA NUMBER RPAREN"""
        p[0] = _REPEATED[p[1]](p[3], p[5])

    def p_expression_points(self, p):
        "expression : PTS PATH RPAREN"
        name = p[2].strip()
        path = name
        if self._base_directory and not os.path.isabs(path):
            path = os.path.join(self._base_directory, path)
        try:
            points = read_point_file(path)
        except PointFileError as error:
            raise ExpressionFileError(str(error)) from error
        p[0] = Leaf(points, source=name)

    def p_error(self, p):
        if p is None:
            raise self._syntax_error(len(self._text), "unexpected end of text")
        raise self._syntax_error(p.lexpos, f"unexpected '{p.value}'")


def parse_expression(text: str, base_directory: Optional[str] = None) -> NearEdgeExpression:
    """Parse a near-edge expression with a fresh parser."""
    return ExpressionParser(base_directory).parse(text)
