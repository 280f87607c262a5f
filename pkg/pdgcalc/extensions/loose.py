import logging
import math
from fractions import Fraction

from pdgcalc.errors import (
    BetweenChainsError, InvalidArgumentError, ModelError, MonotonicityError,
)
from pdgcalc.model.spec import OMEGA, GeneratorId, LooseClass, ModelSpec, gen

logger = logging.getLogger(__name__)


def admissible_successors(gap):
    """
    Successor classes allowed for a class in the gap below level
    ``floor(level)``: chi of its neighbours bounds chi of the new class

    Args:
        gap (GeneratorId): position of the new class

    Returns:
        tuple(GeneratorId): the two integer-level generators after the gap
    """
    low = math.floor(gap.level)
    return gen(gap.chain, low + 1), gen(gap.chain, low + 2)


def adjoin_class(model, gap, succ_choice):
    """
    Adjoins one archimedean class inside a chain gap with a chosen value of
    chi. The chi-set does not change.

    Args:
        model (ModelSpec): model to extend
        gap (GeneratorId): position of the new class, a non-integer level
            of an existing chain; a level of None means past the end of the
            chain
        succ_choice (GeneratorId): class of chi(x) for x in the new class

    Returns:
        ModelSpec

    Raises:
        BetweenChainsError: for a position outside every chain
        MonotonicityError: for a successor outside the admissible window
    """
    chain, level = gap
    if not 0 <= chain <= model.zchains:
        raise InvalidArgumentError("No chain at block position {}".format(
            chain))
    if level is None or (chain == OMEGA and Fraction(level) < 0):
        raise BetweenChainsError(
            "A class between two chains needs a new Z-chain, use extend")
    gap = GeneratorId(chain, Fraction(level))
    if gap.is_integral:
        raise InvalidArgumentError("Level {} already holds a class".format(
            gap.level))
    if model.loose_at(gap) is not None:
        raise InvalidArgumentError("Position {} is taken by g{}".format(
            gap.level, model.loose_at(gap).name))

    allowed = admissible_successors(gap)
    if succ_choice not in allowed:
        raise MonotonicityError(
            "chi of the new class must be {} or {}, got {}".format(
                model.format_generator(allowed[0]),
                model.format_generator(allowed[1]),
                model.format_generator(succ_choice)
                if succ_choice.is_integral else tuple(succ_choice)))

    name = max((lc.name for lc in model.loose), default=0) + 1
    try:
        extended = ModelSpec(zchains=model.zchains, chain_ids=model.chain_ids,
                             loose=model.loose + (
                                 LooseClass(name, gap, succ_choice),))
    except ModelError as e:
        raise MonotonicityError(str(e))
    logger.info("Adjoined g{} at level {} of {} with chi-successor {}".format(
        name, gap.level, model.chain_name(chain),
        extended.format_generator(succ_choice)))
    return extended
