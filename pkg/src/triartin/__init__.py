"""Verification toolkit for triangle Artin groups.

Subpackages cover: free-group words (words), presentations and a bounded
triviality prover (presentations), Stallings graphs with folding and
separation machinery (stallings), level sets of heighted presentation
complexes (levelset), Reidemeister-Schreier rewriting over power
transversals (schreier), Laurent polynomials (laurent) and the perfectness
decision for degree-map kernels (perfectness), exact integer Smith normal
form (snf), and normal forms in free products and the odd dihedral amalgam
(bassserre).  The console entry point is triartin.cli:main.
"""

__version__ = "0.1.0"
