"""Partition diagram categories with exact Z[t] coefficients.

Diagrams, composition with closed-loop counting, the star and sharp
involutions, rook matrices, factorizations, generator-and-relation
presentations and exhaustive enumeration for the partition, planar rook,
rook, Brauer, Temperley-Lieb, rook-Brauer and Motzkin families.
"""

from .category import (EMPTY, ComposedResult, Involution, compose, identity, involute,
                       sharp, skeleton, star, tensor, tensor_all)
from .diagram import (Diagram, Family, Row, Vertex, boundary_positions, is_family,
                      is_planar, make_diagram)
from .enumeration import (ClosureReport, closed_form_count, closure_check, count,
                          enumerate_diagrams, multiplication_table)
from .errors import (ArityMismatch, DiagramError, FamilyMismatch, NoBrauerFactor,
                     NoFactorization, NotAPartition, NotARookBrauerDiagram,
                     NotARookDiagram, OutOfRange, ParseError, TypeMismatch)
from .factorization import (RBMode, decompose_rook, decompose_rook_brauer,
                            decompose_skeleton, decompose_via_skeleton_family, recompose)
from .presentations import (CATEGORIES, CategoryName, CategorySpec, GeneratorAtom,
                            GeneratorWord, Relation, atom_morphism, category_spec,
                            derived_relations, evaluate_word, relation_catalog,
                            synthesize_word, verify_presentation, word_involute)
from .rook import FactorMode, RookMatrix, factor, from_matrix, is_pseudo_echelon, to_matrix
from .scalars import (Morphism, Scalar, T, identity_morphism, morphism_add,
                      morphism_compose, morphism_involute, morphism_scale, morphism_tensor,
                      t_power)
from .textio import parse_diagram, parse_morphism, parse_scalar, parse_word, render

__version__ = "0.1.0"
