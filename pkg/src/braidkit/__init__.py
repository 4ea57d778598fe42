"""braidkit: exact computation in braid groups and their quotients.

Submodules
----------
words          braid words, the free-group action, equality decisions
dynnikov       independent equality oracle on lamination coordinates
arcs           combinatorial arcs, half-twists, pair classification
fpgroups       coset enumeration, subgroup rewriting, abelianization
quotient       the braid quotient by transversal commutators and its series
semidirect     central-extension coefficient groups and semidirect products
series         layered series descriptors and flattened invariant tuples
factorization  factorizations of the full twist and Hurwitz moves
cli            batch command-line frontend
"""

__version__ = "0.1.0"
