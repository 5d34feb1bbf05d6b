# lattice_spectra/__init__.py

# ----- Exact values
from .exactnum import (
    CompositeValue,
    Dependent,
    ExactValue,
    Independent,
    Rational,
    arith,
    format_value,
    is_rational,
    linear_dependence,
    parse_value,
    rational_square_root,
    sign,
)

# ----- Forms
from .qform import (
    Discriminant,
    Form,
    UnimodularMap,
    class_group,
    compose,
    discriminant,
    improper_automorphism,
    is_ambiguous,
    is_equivalent,
    principal_form,
    proper_automorphisms,
    reduce,
)

# ----- Counting and witnesses
from .repcount import (
    RepSet,
    count_R,
    count_r_full,
    count_r_plus,
    first_quadrant_count,
    primitive_representations,
    representations,
    representations_irrational,
    value_counts,
)
from .witness import (
    MultiplicityWitness,
    PrimeWitness,
    find_represented_prime,
    multiplicity_histogram,
    surjectivity_witness,
    theorem_q_witness,
)

# ----- Spectra
from .spectra import (
    MultiplicitySet,
    MultiplicityTag,
    RectangleSpec,
    TorusFormData,
    TorusSpec,
    multiplicity_set_sample,
    rect_classify,
    rect_multiplicity,
    rect_witness,
    torus_classify,
    torus_form,
    torus_four_witness,
    torus_multiplicity,
)

from .errors import DomainError, ExactValueError, SearchExhausted, SpectraError

__version__ = "0.1.0"
