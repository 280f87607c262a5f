"""
Embeddings between finitely presented models. A map is given on
generators: each chain of the source goes to a chain of the target with a
level offset, each loose class to a loose class, and single generators may
be overridden. Linear extension of the generator map gives the map on
elements.
"""
import logging
from collections import namedtuple
from fractions import Fraction

from pdgcalc.errors import InvalidArgumentError, NotInSubmodelError
from pdgcalc.model.group import INF, GroupElement, chi, order_cmp
from pdgcalc.model.spec import (
    OMEGA, PRIME, GeneratorId, LooseClass, ModelSpec, gen,
)

logger = logging.getLogger(__name__)

EmbeddingReport = namedtuple("EmbeddingReport", ["ok", "violations"])


class EmbeddingMap(object):
    """
    Args:
        src (ModelSpec): source model
        dst (ModelSpec): target model
        chain_map (dict): source block position -> (target position, offset)
        loose_map (dict): source loose name -> target loose name
        overrides (dict): GeneratorId -> GeneratorId for single generators
    """

    def __init__(self, src, dst, chain_map, loose_map=None, overrides=None):
        self.src = src
        self.dst = dst
        self.chain_map = dict(chain_map)
        self.loose_map = dict(loose_map or {})
        self.overrides = dict(overrides or {})

    def map_generator(self, g):
        if g in self.overrides:
            return self.overrides[g]
        if g.is_integral:
            pos, offset = self.chain_map[g.chain]
            return GeneratorId(pos, g.level + offset)
        lc = self.src.loose_at(g)
        return self.dst.loose_named(self.loose_map[lc.name]).generator

    def apply(self, x):
        if x is INF:
            return INF
        return GroupElement(self.dst, [(self.map_generator(g), q)
                                       for g, q in x.terms])

    __call__ = apply

    def preimage(self, y):
        """
        Pulls an element of the image back to the source

        Raises:
            NotInSubmodelError: when y is not in the image
        """
        back_chain = {pos: (src_pos, offset)
                      for src_pos, (pos, offset) in self.chain_map.items()}
        back_loose = {name: src for src, name in self.loose_map.items()}
        back_override = {h: g for g, h in self.overrides.items()}
        terms = []
        for h, q in y.terms:
            if h in back_override:
                terms.append((back_override[h], q))
            elif h.is_integral and h.chain in back_chain:
                src_pos, offset = back_chain[h.chain]
                terms.append((GeneratorId(src_pos, h.level - offset), q))
            elif not h.is_integral and \
                    self.dst.loose_at(h).name in back_loose:
                name = back_loose[self.dst.loose_at(h).name]
                terms.append((self.src.loose_named(name).generator, q))
            else:
                raise NotInSubmodelError("{} is not in the image of {}".format(
                    self.dst.format_generator(h), self.src.describe()))
        return GroupElement(self.src, terms)

    def inverse(self):
        """The inverse of a bijective chain-and-loose map"""
        return EmbeddingMap(
            self.dst, self.src,
            {pos: (src_pos, -offset)
             for src_pos, (pos, offset) in self.chain_map.items()},
            {dst: src for src, dst in self.loose_map.items()},
            {h: g for g, h in self.overrides.items()})


def _test_generators(emb, levels):
    gens = set(emb.src.generators_near(levels))
    for g in emb.overrides:
        gens.update([g, GeneratorId(g.chain, g.level + 1)])
        if g.chain != OMEGA or g.level >= 1:
            gens.add(GeneratorId(g.chain, g.level - 1))
    return sorted(gens)


def check_embedding(emb, samples=100, seed=0, levels=4):
    """
    Checks that a generator map is an L_pdg embedding: it keeps the omega
    classes of c and d, is strictly order preserving on generators and
    commutes with the successor map. Random elements then confirm order and
    chi preservation.

    Args:
        emb (EmbeddingMap): map to check
        samples (int): random element pairs to try
        seed (int): sampling seed
        levels (int): how far from level 0 generators are tested

    Returns:
        EmbeddingReport: ``ok`` and a list of violation messages
    """
    from pdgcalc.oracle.sampling import as_rng, random_element
    src, dst = emb.src, emb.dst
    violations = []

    for level in (0, 1):
        g = gen(OMEGA, level)
        try:
            image = emb.map_generator(g)
        except KeyError:
            image = None
        if image != g:
            violations.append("e{} is not fixed".format(level))

    gens = _test_generators(emb, levels)
    images = []
    for g in gens:
        try:
            h = emb.map_generator(g)
        except (KeyError, AttributeError):
            violations.append("{} has no image".format(
                src.format_generator(g)))
            return EmbeddingReport(False, violations)
        if not dst.is_generator(h):
            violations.append("{} maps outside {}".format(
                src.format_generator(g), dst.describe()))
            return EmbeddingReport(False, violations)
        images.append(h)

    for (g1, h1), (g2, h2) in zip(zip(gens, images),
                                  zip(gens[1:], images[1:])):
        if not h1 < h2:
            violations.append("order of {} and {} is not kept".format(
                src.format_generator(g1), src.format_generator(g2)))

    for g, h in zip(gens, images):
        succ_image = emb.map_generator(src.succ(g))
        if succ_image != dst.succ(h):
            violations.append(
                "succ does not commute at {}: {} vs {}".format(
                    src.format_generator(g), dst.format_generator(succ_image),
                    dst.format_generator(dst.succ(h))))

    if not violations:
        rng = as_rng(seed)
        for _ in range(samples):
            x = random_element(src, rng, level_bound=levels)
            y = random_element(src, rng, level_bound=levels)
            fx, fy = emb.apply(x), emb.apply(y)
            if order_cmp(x, y) is not order_cmp(fx, fy):
                violations.append("order of {} and {} is not kept".format(
                    x, y))
                break
            if emb.apply(chi(x)) != chi(fx):
                violations.append("chi is not kept at {}".format(x))
                break

    logger.debug("Embedding {} -> {}: {} violations".format(
        src.describe(), dst.describe(), len(violations)))
    return EmbeddingReport(not violations, violations)


def restrict(ambient, chains, loose=()):
    """
    The substructure spanned by some chains (with Omega) and loose classes

    Args:
        ambient (ModelSpec): model to restrict
        chains (iterable(int)): block positions to keep
        loose (iterable(int)): names of loose classes to keep

    Returns:
        tuple(ModelSpec, EmbeddingMap): the submodel and its inclusion
    """
    kept = sorted(set(chains) | {OMEGA})
    if any(not 0 <= pos < ambient.num_chains for pos in kept):
        raise InvalidArgumentError("Chains {} are not all in {}".format(
            kept, ambient.describe()))
    new_pos = {old: new for new, old in enumerate(kept)}
    loose = set(loose)
    classes = []
    for lc in ambient.loose:
        if lc.name not in loose:
            continue
        if lc.generator.chain not in new_pos:
            raise NotInSubmodelError(
                "g{} lies on a chain that is not kept".format(lc.name))
        pos = new_pos[lc.generator.chain]
        classes.append(LooseClass(
            lc.name, GeneratorId(pos, lc.generator.level),
            GeneratorId(new_pos[lc.succ.chain], lc.succ.level)))
    model = ModelSpec(zchains=len(kept) - 1,
                      chain_ids=tuple(ambient.chain_label(pos)
                                      for pos in kept[1:]),
                      loose=tuple(classes))
    emb = EmbeddingMap(model, ambient,
                       {new: (old, Fraction(0)) for old, new in new_pos.items()},
                       {lc.name: lc.name for lc in classes})
    return model, emb


def prime_embedding(model):
    """The embedding of the prime model onto the omega-chain of a model"""
    return EmbeddingMap(PRIME, model, {OMEGA: (OMEGA, Fraction(0))})
