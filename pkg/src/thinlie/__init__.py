"""Graded Lie algebras over finite fields, built degree by degree from a
finite presentation, with tools for thin algebras and their diamonds."""

from .ffield import GF, FieldElement, FieldError
from .combinatorics import binom_mod_p, lyndon_words, witt_dimension
from .bracketlang import BracketExpr, LnWord, VContext, emit, parse, vword
from .nqengine import (GradedAlgebra, HomElement, Presentation, bracket, build, central_quotient,
                       change_generators, dump_algebra, evaluate, graded_centre, load_algebra, lnprod)
from .presets import make_preset, nottingham_mixed, nottingham_mixed_lambda0, NottinghamParams
from .thinanalysis import (INF, check_covering, classify_degree, diamond_report, expected_record,
                           find_standard_generators, match_expected_pattern, type_text)
from .identity_verifier import SUITES, gen_jacobi_expand, v_elements, verify_all, verify_suite
from .freelie_oracle import brute_quotient_dims, free_dims
from .presfile import format_presentation, parse_presentation, read_presentation, write_presentation

__version__ = "0.1.0"
