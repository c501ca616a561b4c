"""Pancyclicity certificates from edge-count, spectral and degree conditions."""

from .certify import Certificate, Condition, Verdict, certify, certify_edges, certify_mu, certify_q, lemma21_check
from .cycles import CycleSpectrum, cycle_spectrum, has_cycle_of_length, is_pancyclic
from .expr import graph_from_expr, parse_expr
from .graph import DegreeSequence, Graph, build, degree_sequence, disjoint_union, join
from .spectral import adjacency_radius, signless_laplacian_radius

__all__ = [
    "Certificate", "Condition", "CycleSpectrum", "DegreeSequence", "Graph", "Verdict",
    "adjacency_radius", "build", "certify", "certify_edges", "certify_mu", "certify_q",
    "cycle_spectrum", "degree_sequence", "disjoint_union", "graph_from_expr",
    "has_cycle_of_length", "is_pancyclic", "join", "lemma21_check", "parse_expr",
    "signless_laplacian_radius",
]
