# Copyright (c) 2021, The qtrinom Team. All Rights Reserved.
from .nmsystem import (
    Mode, ModelParams, NMSolution, ParameterError, build_params, enumerate_solutions, verify_nm_oracle,
)
from .fermionic import (
    FermPoly, chu_vandermonde_closed_form, chu_vandermonde_sum, fermi, fermi_family, fermi_value, phi,
    upper_branch, verify_even_recurrences, verify_odd_recurrences,
)
from .bosonic import BosonKind, BosPoly, bose, bose_value, verify_bosonic_recurrences, verify_bosonic_relations
from .characters import (
    CharSeries, StabilizationError, chi, fermi_limit, phi13_character, summed_out_character,
    verify_character_identities, verify_finitized,
)
