"""
Finitely presented models: the archimedean classes of a model are the
generators of one omega-chain (``e0, e1, ...``), finitely many Z-chains
(``b<id>.<level>``) and finitely many loose classes (``g<id>``) sitting
inside chain gaps. A generator is addressed by its block position and a
rational level; comparing two of them as tuples is the dominance order.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Tuple

from pdgcalc.errors import ModelError

logger = logging.getLogger(__name__)

OMEGA = 0
"""int: block position of the omega-chain."""


class GeneratorId(NamedTuple):
    """
    An archimedean class. Tuple order is dominance: smaller means more
    dominant, so ``sorted`` lists classes from largest to smallest.
    """
    chain: int
    level: Fraction

    @property
    def is_integral(self):
        return self.level.denominator == 1

    def dominates(self, other):
        """
        Args:
            other (GeneratorId): class to compare against

        Returns:
            bool: True if this class is strictly larger than ``other``
        """
        return self < other

    def shifted(self, k):
        return GeneratorId(self.chain, self.level + k)


def gen(chain, level):
    """
    Builds a GeneratorId with an exact rational level

    Args:
        chain (int): block position, 0 for the omega-chain
        level (int|Fraction|str): level inside the chain

    Returns:
        GeneratorId
    """
    return GeneratorId(int(chain), Fraction(level))


class LooseClass(NamedTuple):
    """
    A class adjoined inside a chain gap together with its chi-successor
    """
    name: int
    generator: GeneratorId
    succ: GeneratorId


@dataclass(frozen=True)
class ModelSpec:
    """
    A model of T_pdg given by its number of Z-chains, the labels of those
    chains (in block order) and the loose classes.

    Args:
        zchains (int): number of Z-chains after the omega-chain
        chain_ids (tuple(int)): label of the Z-chain at each block position
            1..zchains, defaults to the positions themselves
        loose (tuple(LooseClass)): loose classes, in any order
    """
    zchains: int = 0
    chain_ids: Tuple[int, ...] = ()
    loose: Tuple[LooseClass, ...] = ()
    _loose_by_generator: dict = field(default=None, init=False, repr=False,
                                      compare=False, hash=False)
    _loose_by_name: dict = field(default=None, init=False, repr=False,
                                 compare=False, hash=False)

    def __post_init__(self):
        if not self.chain_ids:
            object.__setattr__(self, "chain_ids",
                               tuple(range(1, self.zchains + 1)))
        else:
            object.__setattr__(self, "chain_ids", tuple(self.chain_ids))
        object.__setattr__(self, "loose",
                           tuple(sorted(self.loose, key=lambda lc: lc.name)))
        object.__setattr__(self, "_loose_by_generator",
                           {lc.generator: lc for lc in self.loose})
        object.__setattr__(self, "_loose_by_name",
                           {lc.name: lc for lc in self.loose})
        self.validate()

    # -- chains ---------------------------------------------------------------

    @property
    def num_chains(self):
        """int: the omega-chain plus the Z-chains"""
        return self.zchains + 1

    def chain_label(self, position):
        if position == OMEGA:
            return None
        return self.chain_ids[position - 1]

    def chain_position(self, label):
        """
        Args:
            label (int): the id used in ``b<id>.<level>``

        Returns:
            int: block position of that Z-chain
        """
        try:
            return self.chain_ids.index(label) + 1
        except ValueError:
            raise ModelError("No Z-chain with id {}".format(label))

    def chain_name(self, position):
        if position == OMEGA:
            return "Omega"
        return "Z{}".format(self.chain_label(position))

    # -- generators -----------------------------------------------------------

    def loose_at(self, generator):
        return self._loose_by_generator.get(generator)

    def loose_named(self, name):
        try:
            return self._loose_by_name[name]
        except KeyError:
            raise ModelError("No loose class g{}".format(name))

    def is_generator(self, g):
        if not 0 <= g.chain <= self.zchains:
            return False
        if g.is_integral:
            return g.chain != OMEGA or g.level >= 0
        return g in self._loose_by_generator

    def check_generator(self, g):
        if not self.is_generator(g):
            raise ModelError("Generator {} is not in the model {}".format(
                tuple(g), self.describe()))
        return g

    def succ(self, g):
        """
        The class of chi(x) for x in class ``g``

        Args:
            g (GeneratorId): a generator of this model

        Returns:
            GeneratorId
        """
        if g.is_integral:
            return GeneratorId(g.chain, g.level + 1)
        lc = self._loose_by_generator.get(g)
        if lc is None:
            raise ModelError("Unknown loose generator {}".format(tuple(g)))
        return lc.succ

    def pred(self, g):
        """
        Inverse of succ on the successor images, None when we would leave
        the point set of the omega-chain
        """
        level = g.level - 1
        if g.chain == OMEGA and level < 1:
            return None
        return GeneratorId(g.chain, level)

    def is_successor_image(self, g):
        """
        True for the generators whose negatives are the points of the
        chi-set: omega levels from 1 on and every integer Z-chain level
        """
        if not g.is_integral or not 0 <= g.chain <= self.zchains:
            return False
        return g.chain != OMEGA or g.level >= 1

    def generators_near(self, levels=3):
        """
        Yields a finite sample of generators: integer levels up to
        ``levels`` away from 0 in every chain and every loose class
        """
        for pos in range(self.num_chains):
            lo = 0 if pos == OMEGA else -levels
            for level in range(lo, levels + 1):
                yield GeneratorId(pos, Fraction(level))
        for lc in self.loose:
            yield lc.generator

    # -- distinguished constants ------------------------------------------------

    @property
    def c(self):
        """GroupElement: least element of the chi-set, -e1"""
        from pdgcalc.model.group import GroupElement
        return GroupElement.monomial(self, gen(OMEGA, 1), -1)

    @property
    def d(self):
        """GroupElement: the canonical witness of chi(d) = c, -e0"""
        from pdgcalc.model.group import GroupElement
        return GroupElement.monomial(self, gen(OMEGA, 0), -1)

    # -- validation -------------------------------------------------------------

    def validate(self):
        """
        Raises:
            ModelError: when the presentation does not describe a model
        """
        if self.zchains < 0:
            raise ModelError("zchains must be >= 0")
        if len(self.chain_ids) != self.zchains:
            raise ModelError("Expected {} chain ids, got {}".format(
                self.zchains, len(self.chain_ids)))
        if len(set(self.chain_ids)) != len(self.chain_ids) or any(
                label < 1 for label in self.chain_ids):
            raise ModelError("Chain ids must be distinct positive integers")
        names = [lc.name for lc in self.loose]
        if len(set(names)) != len(names):
            raise ModelError("Duplicate loose class names")
        if len(self._loose_by_generator) != len(self.loose):
            raise ModelError("Two loose classes share a position")
        for lc in self.loose:
            self._check_loose(lc)
        by_gap = {}
        for lc in self.loose:
            floor = math.floor(lc.generator.level)
            by_gap.setdefault((lc.generator.chain, floor), []).append(lc)
        for gap, members in by_gap.items():
            members.sort(key=lambda lc: lc.generator.level)
            for upper, lower in zip(members, members[1:]):
                # upper dominates lower, so its successor must too
                if lower.succ < upper.succ:
                    raise ModelError(
                        "Loose classes g{} and g{} break monotonicity of "
                        "chi".format(upper.name, lower.name))

    def _check_loose(self, lc):
        g = lc.generator
        if g.is_integral:
            raise ModelError("Loose class g{} sits on an integer level".format(
                lc.name))
        if not 0 <= g.chain <= self.zchains:
            raise ModelError("Loose class g{} is on a missing chain".format(
                lc.name))
        if g.chain == OMEGA and g.level < 0:
            raise ModelError(
                "Loose class g{} lies above the omega-chain".format(lc.name))
        low = math.floor(g.level)
        allowed = (gen(g.chain, low + 1), gen(g.chain, low + 2))
        if lc.succ not in allowed:
            raise ModelError(
                "Loose class g{} must have its successor at level {} or {} "
                "of its chain".format(lc.name, low + 1, low + 2))

    # -- naming -----------------------------------------------------------------

    def format_generator(self, g):
        """
        Args:
            g (GeneratorId): generator of this model

        Returns:
            str: ``e<l>``, ``b<id>.<l>`` or ``g<name>``
        """
        if not g.is_integral:
            lc = self.loose_at(g)
            if lc is None:
                raise ModelError("Unknown loose generator {}".format(tuple(g)))
            return "g{}".format(lc.name)
        if g.chain == OMEGA:
            return "e{}".format(g.level)
        return "b{}.{}".format(self.chain_label(g.chain), g.level)

    def describe(self):
        """
        Returns:
            str: chain blocks in order, e.g. ``[Omega, Z1, Z2]``
        """
        blocks = [self.chain_name(pos) for pos in range(self.num_chains)]
        text = "[{}]".format(", ".join(blocks))
        if self.loose:
            text += " + " + ", ".join(
                "g{}".format(lc.name) for lc in self.loose)
        return text


PRIME = ModelSpec()
"""ModelSpec: the prime model, the omega-chain alone."""


class Submodel(NamedTuple):
    """
    The substructure of a model spanned by some of its chains (always
    including the omega-chain) and some loose classes on those chains
    """
    chains: frozenset
    loose: frozenset = frozenset()

    @classmethod
    def of(cls, chains, loose=()):
        chains = frozenset(chains) | {OMEGA}
        return cls(chains, frozenset(loose))

    def contains(self, model, g):
        if g.chain not in self.chains:
            return False
        if g.is_integral:
            return True
        lc = model.loose_at(g)
        return lc is not None and lc.name in self.loose

    def in_span(self, x):
        """True when every generator of the element x lies in the submodel"""
        return all(self.contains(x.model, g) for g in x.support)

    def outside(self, x):
        """list(GeneratorId): generators of x missing from the submodel"""
        return [g for g in x.support if not self.contains(x.model, g)]

    def describe(self, model):
        blocks = [model.chain_name(pos) for pos in sorted(self.chains)]
        blocks += ["g{}".format(name) for name in sorted(self.loose)]
        return "[{}]".format(", ".join(blocks))
