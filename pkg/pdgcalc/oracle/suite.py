"""
Property suites for the T_pdg axioms and the basic chi lemmas.

Each property draws witnesses from a seeded generator and checks them
against a chi map, by default the model's own. A check returns True when
the property holds, False on a counterexample and None when the witness
misses the property's hypothesis (it then does not count towards ``n``).
Failing witnesses are shrunk before they are reported.
"""
import logging
from collections import namedtuple
from functools import partial
from multiprocessing import Pool

import numpy as np
import pandas as pd

from pdgcalc.errors import InvalidArgumentError, PdgError
from pdgcalc.extensions.simple import delta_gamma, delta_membership
from pdgcalc.model.group import (
    GroupElement, ValuationOrdering, archimedean_equivalent, chi, chi_inv,
    is_chi_set_point, valuation_cmp,
)
from pdgcalc.oracle.sampling import (
    random_element, random_nonzero, random_point, random_rational,
    random_submodel_pair, shrink,
)
from pdgcalc.oracle.window import delta_points, delta_preimage, window_enum

logger = logging.getLogger(__name__)

Property = namedtuple("Property", ["name", "draw", "check"])

REPORT_COLUMNS = ["property", "status", "n", "witness"]


# -- draws ------------------------------------------------------------------------

def _one(model, rng):
    return (random_element(model, rng, deep=True),)


def _two(model, rng):
    return (random_element(model, rng, deep=True),
            random_element(model, rng, deep=True))


def _three(model, rng):
    return (random_nonzero(model, rng), random_element(model, rng),
            random_element(model, rng))


def _negative(model, rng):
    x = random_nonzero(model, rng, deep=True)
    return (-abs(x),)


def _same_class(model, rng):
    x = random_nonzero(model, rng)
    return (x, x.scale(abs(random_rational(rng))) + random_element(model, rng))


def _perturbed(model, rng):
    x = random_nonzero(model, rng)
    return (x, x + random_element(model, rng))


def _opposite_signs(model, rng):
    return (-abs(random_nonzero(model, rng)), abs(random_nonzero(model, rng)))


def _points(model, rng):
    return (random_point(model, rng, deep=True),)


def _point_pair(model, rng):
    return tuple(sorted((random_point(model, rng), random_point(model, rng))))


def _point_sum(model, rng):
    n = int(rng.integers(1, 5))
    points = sorted({random_point(model, rng) for _ in range(n)})
    coeffs = [random_rational(rng) for _ in points]
    return tuple(points) + tuple(coeffs)


def _divisible(model, rng):
    return (random_element(model, rng), int(rng.integers(1, 6)))


def _constants(model, rng):
    return (model.d,)


def _extension(model, rng):
    try:
        sub, a = random_submodel_pair(model, rng)
    except InvalidArgumentError:
        return None
    x = random_element(model, rng)
    x = GroupElement(model, [(g, q) for g, q in x.terms
                             if sub.contains(model, g)])
    return (sub, a, x, random_rational(rng))


DELTA_WINDOW = 3


def _delta_point(model, rng):
    try:
        sub, a = random_submodel_pair(model, rng)
    except InvalidArgumentError:
        return None
    report = delta_gamma(model, sub, a)
    points = delta_points(report, window_enum(model, DELTA_WINDOW))
    if not points:
        return None
    return (sub, a, points[rng.integers(len(points))])


# -- checks -----------------------------------------------------------------------

def chi_zero(model, chi_fn, x):
    return chi_fn(x).is_zero == x.is_zero


def chi_odd(model, chi_fn, x):
    return chi_fn(-x) == -chi_fn(x)


def chi_monotone(model, chi_fn, x, y):
    if y < x:
        x, y = y, x
    return not chi_fn(y) < chi_fn(x)


def chi_class_constant(model, chi_fn, x, y):
    if x.sign != y.sign or not archimedean_equivalent(x, y):
        return None
    return chi_fn(x) == chi_fn(y)


def chi_double(model, chi_fn, x):
    return chi_fn(x.scale(2)) == chi_fn(x)


def centripetal(model, chi_fn, x):
    if x.is_zero:
        return None
    return abs(chi_fn(x)) < abs(x)


def chi_negative(model, chi_fn, x):
    if not x.sign < 0:
        return None
    return chi_fn(x).sign < 0 and chi_fn(-x).sign > 0


def chi_of_sum(model, chi_fn, x, y):
    return not chi_fn(x + y) < min(chi_fn(x), chi_fn(y))


def chi_difference_negative(model, chi_fn, x, y):
    if not chi_fn(x) < chi_fn(y) or not chi_fn(y).sign < 0:
        return None
    return chi_fn(x - y) == chi_fn(x)


def chi_difference_positive(model, chi_fn, x, y):
    if not chi_fn(x).sign > 0 or not chi_fn(x) < chi_fn(y):
        return None
    return chi_fn(y - x) == chi_fn(y)


def chi_difference_mixed(model, chi_fn, x, y):
    if not x.sign < 0 < y.sign:
        return None
    cx, cy = chi_fn(abs(x)), chi_fn(abs(y))
    if cy < cx:
        return chi_fn(x - y) == chi_fn(x)
    if cx < cy:
        return chi_fn(y - x) == chi_fn(y)
    return None


def valuation_bounds_chi(model, chi_fn, x, y):
    if valuation_cmp(x, y) is ValuationOrdering.V_GREATER:
        return None
    return not abs(chi_fn(x)) < abs(chi_fn(y))


def close_elements_share_chi(model, chi_fn, x, y):
    if valuation_cmp(x - y, x) is not ValuationOrdering.V_GREATER:
        return None
    return chi_fn(x) == chi_fn(y)


def dominant_summand(model, chi_fn, a, b1, b2):
    for b in (b1, b2):
        if valuation_cmp(a, b) is not ValuationOrdering.V_LESS:
            return None
    return chi_fn(a + b1 + b2) == chi_fn(a)


def centripetal_valuation(model, chi_fn, x):
    if x.is_zero:
        return None
    return valuation_cmp(chi_fn(x), x) is ValuationOrdering.V_GREATER


def independent_points(model, chi_fn, *witness):
    n = len(witness) // 2
    points, coeffs = witness[:n], witness[n:]
    if not points or not all(is_chi_set_point(p) for p in points) or \
            list(points) != sorted(set(points)):
        return None
    total = points[0].scale(0)
    for p, q in zip(points, coeffs):
        total = total + p.scale(q)
    expected = chi_fn(points[0])
    return chi_fn(total) == (expected if coeffs[0] > 0 else -expected)


def least_point(model, chi_fn, x):
    if not x.sign < 0:
        return None
    return not chi_fn(x) < model.c


def chi_set_cofinal(model, chi_fn, x):
    if not x.sign < 0:
        return None
    y = chi_fn(x)
    return x < y and y.sign < 0


def chi_set_successor(model, chi_fn, p):
    if not is_chi_set_point(p):
        return None
    q = chi_fn(p)
    if not (is_chi_set_point(q) and p < q and model.c < q):
        return False
    if p == model.c:
        return True
    return chi_fn(chi_inv(p)) == p


def successor_between(model, chi_fn, a, b):
    if not (is_chi_set_point(a) and is_chi_set_point(b) and a < b):
        return None
    return a < chi_fn(a) and not b < chi_fn(a)


def divisibility(model, chi_fn, x, n):
    return x.divide(n).scale(n) == x


def chi_d_is_c(model, chi_fn, d):
    return chi_fn(d) == model.c


def nontrivial(model, chi_fn, d):
    return not d.is_zero and not chi_fn(d).is_zero


def delta_gamma_bound(model, chi_fn, sub, a, x, q):
    if not sub.in_span(x):
        return None
    y = x + a.scale(q)
    if not y.sign < 0:
        return None
    return delta_membership(delta_gamma(model, sub, a), chi_fn(y))


def delta_gamma_reached(model, chi_fn, sub, a, p):
    report = delta_gamma(model, sub, a)
    if not delta_membership(report, p):
        return None
    return delta_preimage(report, p, size=DELTA_WINDOW, chi_fn=chi_fn) is not None


PROPERTIES = [
    Property("chi-zero", _one, chi_zero),
    Property("chi-odd", _one, chi_odd),
    Property("chi-monotone", _two, chi_monotone),
    Property("chi-class-constant", _same_class, chi_class_constant),
    Property("chi-double", _one, chi_double),
    Property("centripetal", _one, centripetal),
    Property("chi-negative", _negative, chi_negative),
    Property("chi-of-sum", _two, chi_of_sum),
    Property("chi-difference-negative", _two, chi_difference_negative),
    Property("chi-difference-positive", _two, chi_difference_positive),
    Property("chi-difference-mixed", _opposite_signs, chi_difference_mixed),
    Property("valuation-bounds-chi", _two, valuation_bounds_chi),
    Property("close-elements-share-chi", _perturbed, close_elements_share_chi),
    Property("dominant-summand", _three, dominant_summand),
    Property("centripetal-valuation", _one, centripetal_valuation),
    Property("independent-points", _point_sum, independent_points),
    Property("least-point", _negative, least_point),
    Property("chi-set-cofinal", _negative, chi_set_cofinal),
    Property("chi-set-successor", _points, chi_set_successor),
    Property("successor-between", _point_pair, successor_between),
    Property("divisibility", _divisible, divisibility),
    Property("chi-d-is-c", _constants, chi_d_is_c),
    Property("nontrivial", _constants, nontrivial),
    Property("delta-gamma", _extension, delta_gamma_bound),
    Property("delta-gamma-reached", _delta_point, delta_gamma_reached),
]
"""list(Property): every property, in report order."""

PROPERTY_NAMES = [prop.name for prop in PROPERTIES]


def _check(prop, model, chi_fn, witness):
    try:
        return prop.check(model, chi_fn, *witness)
    except PdgError:
        return False


def _format_witness(witness):
    return ", ".join(str(w) for w in witness)


def run_property(index, model, samples, seed, chi_fn=chi):
    """
    Runs one property over its own deterministic stream of draws

    Returns:
        dict: a report row
    """
    prop = PROPERTIES[index]
    rng = np.random.default_rng([seed, index])
    count = 0
    for _ in range(samples):
        witness = prop.draw(model, rng)
        if witness is None:
            continue
        outcome = _check(prop, model, chi_fn, witness)
        if outcome is None:
            continue
        count += 1
        if outcome is False:
            witness = shrink(witness, lambda w: _check(
                prop, model, chi_fn, w) is False)
            logger.warning("Property {} fails at {}".format(
                prop.name, _format_witness(witness)))
            return {"property": prop.name, "status": "FAIL", "n": count,
                    "witness": _format_witness(witness)}
    logger.debug("Property {} held on {} witnesses".format(prop.name, count))
    return {"property": prop.name, "status": "PASS", "n": count,
            "witness": ""}


def axiom_suite(model, samples=10000, seed=0, pool_size=0, chi_fn=None,
                names=None):
    """
    Checks the axioms and lemmas on random draws

    Args:
        model (ModelSpec): model under test
        samples (int): draws per property
        seed (int): base seed, every property gets its own stream
        pool_size (int): worker processes, 0 runs inline
        chi_fn (callable): replacement for chi, for mutation tests
        names (list(str)): run only these properties

    Returns:
        pandas.DataFrame: one row per property, columns ``REPORT_COLUMNS``
    """
    chi_fn = chi_fn or chi
    indices = [i for i, prop in enumerate(PROPERTIES)
               if names is None or prop.name in names]
    logger.info("Running {} properties on {} with {} samples".format(
        len(indices), model.describe(), samples))
    task = partial(run_property, model=model, samples=samples, seed=seed,
                   chi_fn=chi_fn)
    if pool_size > 0:
        with Pool(pool_size) as p:
            rows = p.map(task, indices)
    else:
        rows = [task(i) for i in indices]
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def all_pass(report):
    return bool((report["status"] == "PASS").all())


def format_report(report):
    """
    Returns:
        str: ``PASS <property> n=<n>`` or ``FAIL <property> witness=<w>``
            lines
    """
    lines = []
    for row in report.itertuples(index=False):
        if row.status == "PASS":
            lines.append("PASS {} n={}".format(row.property, row.n))
        else:
            lines.append("FAIL {} witness={}".format(row.property,
                                                     row.witness))
    return "\n".join(lines)
