"""Finite loops: Osborn identities, principal isotopes, autotopisms and complexes of isotopes."""
from .certificate import Certificate
from .corpus import builtin, builtins, chein_double, enumerate_loops
from .errors import (BadFilter, BoundExceeded, Gamma23Mismatch, HypothesisFailed,
                     IdentitySyntaxError, LoopError, Malformed, NoIdentity, NotAGroup, NotLatin,
                     OrderMismatch, UnknownVertex)
from .identity import check_identity, classify, parse_identity
from .isotopy import (IsoTriple, autotopisms, bryant_schneider_identity_test, bs2_contains, drisko,
                      find_isomorphism, is_autotopism, is_g_loop, is_isotopism, principal_isotope,
                      regularity)
from .loop import Loop, divide, inverse_element, nucleus, parse_loop, render_loop, translation
from .osborn import (Conventions, ParamTriple, build_isotope, check_theorem, gamma, is_osborn,
                     is_universal_osborn, phi, verify_diagram)
from .perm import Perm

__version__ = "0.1.0"
