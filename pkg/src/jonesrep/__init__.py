"""Jones (Temperley-Lieb) representations of braid groups, the homology of the
associated branched double covers, and the intertwiner between them at q = -1.
"""
from .braids import BraidWord, catalog, catalog_word, parse, word
from .exterior import WedgeSpace, induced_map, quotient_by_omega, wedge
from .homology import build_setup, psi_matrix, symplectic_bivector
from .intertwiner import phi, phi_tilde, verify_equivariance, verify_rank
from .scalars import GaussianRational, LaurentPoly
from .spectral import eigenvalues, order_certificates, sr_scan, stretch_estimate
from .tl import Diagram, apply_e, dimension, enumerate_basis, rep_sigma, rep_word

__all__ = [
    "BraidWord", "catalog", "catalog_word", "parse", "word",
    "WedgeSpace", "induced_map", "quotient_by_omega", "wedge",
    "build_setup", "psi_matrix", "symplectic_bivector",
    "phi", "phi_tilde", "verify_equivariance", "verify_rank",
    "GaussianRational", "LaurentPoly",
    "eigenvalues", "order_certificates", "sr_scan", "stretch_estimate",
    "Diagram", "apply_e", "dimension", "enumerate_basis", "rep_sigma", "rep_word",
]
