audit_help = """
Audit one algebra against the four conditions characterizing 2-star-permutability:
star-permutability of congruences and of compatible equivalence relations, and
(left) star-symmetry of every reflexive compatible relation.
The context defaults to total.
"""

check_relation_help = """
Check properties of one relation read from a relation file: (left) star-symmetry
in the chosen context, reflexivity, symmetry, transitivity and compatibility.
Every property is checked when no --property is given.
"""

check_identities_help = """
Run the laws of the star calculus (star of a composite, star as a pullback,
inverse images, kernel pairs, the diagonal pullback) over every compatible
relation and every endomorphism of the algebra.
"""

find_terms_help = """
Search the clone of the algebra for a Mal'tsev term or for E-subtractive terms
s_e(x,y) with s_e(x,x)=e and s_e(x,e)=x. Found terms hold in the whole variety
generated by the algebra. E-subtractive searches default to the proto context.
"""

congruences_help = """
List every congruence of the algebra, one partition per line.
"""

context_option_help = "Context: total, pointed:<element|constant> or proto."
property_option_help = "Relation property to check; may be repeated."
machine_option_help = "Print only CHECK lines and listings, one per line."
