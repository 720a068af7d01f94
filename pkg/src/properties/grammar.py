"""
Parser for the property DSL.

Precedence is not > and > or, and/or are left-associative. A property text may
start with an ``@monotone`` annotation and may contain ``#`` line comments.
"""

import threading
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from arpeggio import NoMatch, PTNodeVisitor, visit_parse_tree
from arpeggio.cleanpeg import ParserPEG
from loguru import logger

from src.core.errors import PropertySemanticError, PropertySyntaxError
from src.properties.ast import (
    And,
    Comparison,
    Const,
    DiameterAtLeast,
    EdgeParity,
    HasIndependentSet,
    MaxDegreeAtMost,
    Node,
    Not,
    NumEdges,
    Or,
    Parity,
    SimpleAtom,
    SimpleKind,
    VertexCountIn,
)
from src.properties.spec import PropertySpec

property_grammar = r"""
property = monotone_tag? disjunction EOF
monotone_tag = r'@monotone\b'

disjunction = conjunction (or_kw conjunction)*
conjunction = term (and_kw term)*
term = negation / group / atom
negation = not_kw term
group = "(" disjunction ")"

atom = literal / edge_parity / max_degree / diameter / independent_set
     / num_edges / vertex_count_in / simple

literal = r'(true|false)\b'
simple = r'(disconnected|connected|bipartite|clique|independent)\b'
edge_parity = r'edge_parity\b' "(" parity ")"
parity = r'(even|odd)\b'
max_degree = r'max_degree\b' "<=" rational r'n\b'
diameter = r'diam\b' ">=" rational r'n\b'
independent_set = r'has_independent_set\b' "(" integer ")"
num_edges = r'num_edges\b' comparison integer
vertex_count_in = r'vertex_count_in\b' "(" integer ("," integer)* ")"

comparison = r'<=|>=|=='
rational = integer ("/" integer)?
integer = r'\d+'

not_kw = r'not\b'
and_kw = r'and\b'
or_kw = r'or\b'

comment = r'#[^\n]*'
"""


class Annotation(str, Enum):
    MONOTONE = "@monotone"


def _nodes(children) -> List[Node]:
    return [child for child in children if isinstance(child, Node)]


def _ints(children) -> List[int]:
    return [child for child in children if isinstance(child, int) and not isinstance(child, bool)]


class PropertyBuilder(PTNodeVisitor):
    """Builds the expression tree from an arpeggio parse tree."""

    def __init__(self, parser: ParserPEG, **kwargs):
        super().__init__(**kwargs)
        self.parser = parser

    def _position(self, node):
        return self.parser.pos_to_linecol(node.position)

    def visit_property(self, node, children):
        annotated = any(child is Annotation.MONOTONE for child in children)
        return annotated, _nodes(children)[0]

    def visit_monotone_tag(self, node, children):
        return Annotation.MONOTONE

    def visit_disjunction(self, node, children):
        operands = _nodes(children)
        return operands[0] if len(operands) == 1 else Or(tuple(operands))

    def visit_conjunction(self, node, children):
        operands = _nodes(children)
        return operands[0] if len(operands) == 1 else And(tuple(operands))

    def visit_term(self, node, children):
        return _nodes(children)[0]

    def visit_negation(self, node, children):
        return Not(_nodes(children)[0])

    def visit_group(self, node, children):
        return _nodes(children)[0]

    def visit_atom(self, node, children):
        return _nodes(children)[0]

    def visit_not_kw(self, node, children):
        return None

    visit_and_kw = visit_not_kw
    visit_or_kw = visit_not_kw

    def visit_literal(self, node, children):
        return Const(node.flat_str() == "true", self._position(node))

    def visit_simple(self, node, children):
        return SimpleAtom(SimpleKind(node.flat_str()), self._position(node))

    def visit_parity(self, node, children):
        return Parity(node.flat_str())

    def visit_edge_parity(self, node, children):
        parity = next(child for child in children if isinstance(child, Parity))
        return EdgeParity(parity, self._position(node))

    def visit_integer(self, node, children):
        return int(node.flat_str())

    def visit_rational(self, node, children):
        numbers = _ints(children)
        if len(numbers) == 1:
            return Fraction(numbers[0])
        numerator, denominator = numbers
        if denominator == 0:
            line, column = self._position(node)
            raise PropertySemanticError(
                f"malformed rational {numerator}/{denominator}", line=line, column=column
            )
        return Fraction(numerator, denominator)

    def visit_comparison(self, node, children):
        return Comparison(node.flat_str())

    def visit_max_degree(self, node, children):
        ratio = next(child for child in children if isinstance(child, Fraction))
        return MaxDegreeAtMost(ratio, self._position(node))

    def visit_diameter(self, node, children):
        ratio = next(child for child in children if isinstance(child, Fraction))
        return DiameterAtLeast(ratio, self._position(node))

    def visit_independent_set(self, node, children):
        return HasIndependentSet(_ints(children)[0], self._position(node))

    def visit_num_edges(self, node, children):
        comparison = next(child for child in children if isinstance(child, Comparison))
        return NumEdges(comparison, _ints(children)[0], self._position(node))

    def visit_vertex_count_in(self, node, children):
        return VertexCountIn(frozenset(_ints(children)), self._position(node))


_parser: Optional[ParserPEG] = None
_parser_lock = threading.Lock()


def _get_parser() -> ParserPEG:
    global _parser
    if _parser is None:
        _parser = ParserPEG(
            property_grammar,
            root_rule_name="property",
            comment_rule_name="comment",
        )
    return _parser


def parse_property(text: str) -> PropertySpec:
    """
    Parse a property text into a PropertySpec.

    The declared edge-monotone flag is set by an ``@monotone`` annotation or by
    the inferred polarity of the expression.

    Raises:
        PropertySyntaxError: text does not conform to the grammar (unknown atoms included)
        PropertySemanticError: a rational constant has a zero denominator
    """
    with _parser_lock:
        parser = _get_parser()
        try:
            tree = parser.parse(text)
        except NoMatch as e:
            raise PropertySyntaxError(
                f"unexpected input in property {text.strip()!r}",
                line=getattr(e, "line", None),
                column=getattr(e, "col", None),
            ) from None
        annotated, ast = visit_parse_tree(tree, PropertyBuilder(parser))

    inferred = ast.polarity().closed_under_deletion
    logger.debug(f"Parsed property {ast} (annotated={annotated}, inferred monotone={inferred})")
    return PropertySpec(
        ast=ast,
        declared_edge_monotone=annotated or inferred,
        source=text.strip(),
    )
