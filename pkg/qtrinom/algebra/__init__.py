from .laurent import (
    INFINITY, ONE, QUARTER, ZERO, InexactDivisionError, QLaurent, QSeries, add, eval_at_one,
    inverse_pochhammer, mul, pochhammer, q, series_inverse, shift, to_quarters,
)
from .gauss import qbinom, qbinom_modified, qbinom_modified_closed_form, qtrinom, trinom_limit
from .identities import (
    trinomial_coefficient, verify_binomial_recurrences, verify_trinomial_limits, verify_trinomial_properties,
)
