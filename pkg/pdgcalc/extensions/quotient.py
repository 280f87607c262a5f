"""
Quotients by the convex subgroup spanned by a suffix of the chains. The
subgroup is closed under chi and its preimage, so chi passes to the
quotient.
"""
import logging

from pdgcalc.errors import InvalidArgumentError
from pdgcalc.model.group import INF, GroupElement
from pdgcalc.model.spec import ModelSpec

logger = logging.getLogger(__name__)


class Projection(object):
    """
    The quotient map that forgets the coordinates on chains ``>= m``

    Args:
        src (ModelSpec): model being divided
        dst (ModelSpec): the quotient
        m (int): number of kept chains
    """

    def __init__(self, src, dst, m):
        self.src = src
        self.dst = dst
        self.m = m

    def apply(self, x):
        if x is INF:
            return INF
        return GroupElement(self.dst, [(g, q) for g, q in x.terms
                                       if g.chain < self.m])

    __call__ = apply


def quotient(model, m):
    """
    Args:
        model (ModelSpec): model to divide
        m (int): keep the chain prefix ``0 .. m-1``, 1 <= m <= num_chains

    Returns:
        tuple(ModelSpec, Projection)
    """
    if m < 1:
        raise InvalidArgumentError(
            "Cannot quotient away the omega-chain (keep >= 1, got {})".format(
                m))
    if m > model.num_chains:
        raise InvalidArgumentError("{} has only {} chains".format(
            model.describe(), model.num_chains))
    loose = tuple(lc for lc in model.loose if lc.generator.chain < m)
    target = ModelSpec(zchains=m - 1, chain_ids=model.chain_ids[:m - 1],
                       loose=loose)
    logger.info("Quotient of {} keeping {} chains: {}".format(
        model.describe(), m, target.describe()))
    return target, Projection(model, target, m)
