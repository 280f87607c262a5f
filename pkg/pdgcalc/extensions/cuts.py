"""
Special cuts of the chi-set and the Gamma_f construction, which inserts new
Z-chains of chi-set points at such cuts.
"""
import logging
from fractions import Fraction
from typing import NamedTuple, Tuple

from pdgcalc.chifn.regions import BOTTOM, Region, end_of
from pdgcalc.errors import InvalidPlanError
from pdgcalc.extensions.embedding import EmbeddingMap
from pdgcalc.model.spec import OMEGA, GeneratorId, LooseClass, ModelSpec

logger = logging.getLogger(__name__)


class SpecialCut(NamedTuple):
    """
    The lower cut made of the chains ``0 .. m-1`` of the chi-set
    """
    m: int

    def region(self, model):
        """Region: the points of the lower set"""
        return Region(BOTTOM, end_of(self.m - 1, model))


def special_cuts(model):
    """
    Every nonempty lower cut of the chi-set closed under chi is a union of
    whole chains, so the special cuts are the chain prefixes

    Returns:
        list(SpecialCut): m = 1 .. num_chains
    """
    return [SpecialCut(m) for m in range(1, model.num_chains + 1)]


class ExtensionPlan(NamedTuple):
    """
    A weakly increasing list of special cuts, one new Z-chain for each.
    Chains inserted at the same cut stack upwards in plan order.
    """
    insertions: Tuple[int, ...] = ()

    @classmethod
    def of(cls, insertions):
        return cls(tuple(int(m) for m in insertions))

    def validate(self, model):
        """
        Raises:
            InvalidPlanError: for a cut index outside 1..num_chains or a
                decreasing plan
        """
        for m in self.insertions:
            if not 1 <= m <= model.num_chains:
                raise InvalidPlanError(
                    "Cut {} is not a special cut of {} (1..{})".format(
                        m, model.describe(), model.num_chains))
        for m1, m2 in zip(self.insertions, self.insertions[1:]):
            if m2 < m1:
                raise InvalidPlanError("Plan {} is not increasing".format(
                    list(self.insertions)))

    def __str__(self):
        return "[{}]".format(", ".join(str(m) for m in self.insertions))


def extend_zed(model, plan):
    """
    Builds Gamma_f: one fresh Z-chain per plan entry, placed right after
    the last chain of its cut (so above every point of the cut and below
    the rest of the chi-set)

    Args:
        model (ModelSpec): the model to extend
        plan (ExtensionPlan|list(int)): cuts to insert at

    Returns:
        tuple(ModelSpec, EmbeddingMap): the extension and the inclusion
    """
    if not isinstance(plan, ExtensionPlan):
        plan = ExtensionPlan.of(plan)
    plan.validate(model)

    next_label = max(model.chain_ids, default=0) + 1
    blocks = []
    for pos in range(model.num_chains):
        blocks.append(("old", pos))
        for m in plan.insertions:
            if m == pos + 1:
                blocks.append(("new", next_label))
                next_label += 1

    new_pos = {}
    chain_ids = []
    for i, (kind, value) in enumerate(blocks):
        if kind == "old":
            new_pos[value] = i
            if value != OMEGA:
                chain_ids.append(model.chain_label(value))
        else:
            chain_ids.append(value)

    def moved(g):
        return GeneratorId(new_pos[g.chain], g.level)

    loose = tuple(LooseClass(lc.name, moved(lc.generator), moved(lc.succ))
                  for lc in model.loose)
    extended = ModelSpec(zchains=len(blocks) - 1, chain_ids=tuple(chain_ids),
                         loose=loose)
    inclusion = EmbeddingMap(
        model, extended,
        {pos: (new_pos[pos], Fraction(0)) for pos in range(model.num_chains)},
        {lc.name: lc.name for lc in model.loose})
    logger.info("Extended {} by plan {}: {}".format(
        model.describe(), plan, extended.describe()))
    return extended, inclusion


def inserted_chains(inclusion):
    """
    Returns:
        list(int): block positions of the target not hit by the inclusion
    """
    hit = {pos for pos, _ in inclusion.chain_map.values()}
    return [pos for pos in range(inclusion.dst.num_chains) if pos not in hit]


def isomorphism(first, second):
    """
    The canonical map between two constructions of the same plan over the
    same model, sending the chains of one to the chains at the same block
    positions of the other (``b_k`` to ``b'_k`` level by level)

    Args:
        first (EmbeddingMap): inclusion returned by extend_zed
        second (EmbeddingMap): another inclusion of the same source

    Returns:
        EmbeddingMap
    """
    if first.src != second.src or \
            first.dst.num_chains != second.dst.num_chains:
        raise InvalidPlanError("Constructions of different plans")
    return EmbeddingMap(
        first.dst, second.dst,
        {pos: (pos, Fraction(0)) for pos in range(first.dst.num_chains)},
        {lc.name: lc.name for lc in first.dst.loose})
