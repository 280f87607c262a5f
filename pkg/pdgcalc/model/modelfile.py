"""
Reading and writing the line-oriented model file format::

    model
    zchains 2
    zchain 1 at-cut 1
    zchain 7 at-cut 2
    loose g1 at e9/2 succ e5

``zchain <id> at-cut <m>`` puts the Z-chain labelled ``id`` at block
position ``m``; generators on it are written ``b<id>.<level>``. Blank lines
and ``#`` comments are ignored.
"""
import logging
import os
import re
from fractions import Fraction

from pdgcalc.errors import ModelError, ModelFileError
from pdgcalc.model.presets import PRESETS
from pdgcalc.model.spec import OMEGA, LooseClass, ModelSpec, gen

logger = logging.getLogger(__name__)

RATIONAL = r"-?\d+(?:/\d+)?"
POSITION_RE = re.compile(
    r"^(?:e(?P<e>{r})|b(?P<label>\d+)\.(?P<b>{r}))$".format(r=RATIONAL))
LOOSE_RE = re.compile(
    r"^loose\s+g(?P<name>\d+)\s+at\s+(?P<at>\S+)\s+succ\s+(?P<succ>\S+)$")
ZCHAIN_RE = re.compile(r"^zchain\s+(?P<label>\d+)\s+at-cut\s+(?P<m>\d+)$")
ZCHAINS_RE = re.compile(r"^zchains\s+(?P<n>\d+)$")


def parse_position(token, chain_ids, lineno=0):
    """
    Try to parse a generator position like ``e9/2`` or ``b3.-1``

    :param token: the text of the position
    :param chain_ids: Z-chain labels in block order
    :param lineno: line number for error messages
    :return: the generator at that position
    :type: GeneratorId
    """
    match = POSITION_RE.match(token)
    if not match:
        raise ModelFileError("Bad generator '{}'".format(token), lineno)
    if match.group("e") is not None:
        return gen(OMEGA, Fraction(match.group("e")))
    label = int(match.group("label"))
    if label not in chain_ids:
        raise ModelFileError("No Z-chain with id {}".format(label), lineno)
    return gen(chain_ids.index(label) + 1, Fraction(match.group("b")))


def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, re.sub(r"\s+", " ", line)


def parse_model(text):
    """
    Parses the text of a model file

    Args:
        text (str): file contents

    Returns:
        ModelSpec: the described model

    Raises:
        ModelFileError: for malformed lines or an inconsistent model
    """
    lines = list(_lines(text))
    if not lines or lines[0][1] != "model":
        raise ModelFileError("Model files start with 'model'",
                             lines[0][0] if lines else 0)
    zchains = 0
    placements = {}
    loose_lines = []
    seen_zchains = False
    for lineno, line in lines[1:]:
        if ZCHAINS_RE.match(line):
            if seen_zchains:
                raise ModelFileError("Repeated 'zchains' line", lineno)
            zchains = int(ZCHAINS_RE.match(line).group("n"))
            seen_zchains = True
        elif ZCHAIN_RE.match(line):
            match = ZCHAIN_RE.match(line)
            m = int(match.group("m"))
            if m in placements:
                raise ModelFileError(
                    "Block position {} placed twice".format(m), lineno)
            placements[m] = (int(match.group("label")), lineno)
        elif LOOSE_RE.match(line):
            loose_lines.append((lineno, LOOSE_RE.match(line)))
        else:
            raise ModelFileError("Cannot read '{}'".format(line), lineno)

    if placements:
        if sorted(placements) != list(range(1, zchains + 1)):
            lineno = max(ln for _, ln in placements.values())
            raise ModelFileError(
                "zchain lines must place positions 1..{}".format(zchains),
                lineno)
        chain_ids = tuple(placements[m][0] for m in sorted(placements))
    else:
        chain_ids = tuple(range(1, zchains + 1))

    loose = []
    for lineno, match in loose_lines:
        at = parse_position(match.group("at"), chain_ids, lineno)
        succ = parse_position(match.group("succ"), chain_ids, lineno)
        loose.append(LooseClass(int(match.group("name")), at, succ))

    try:
        model = ModelSpec(zchains=zchains, chain_ids=chain_ids,
                          loose=tuple(loose))
    except ModelError as e:
        raise ModelFileError(str(e), lines[-1][0])
    logger.debug("Parsed model {}".format(model.describe()))
    return model


def format_position(model, g):
    if g.chain == OMEGA:
        return "e{}".format(g.level)
    return "b{}.{}".format(model.chain_label(g.chain), g.level)


def dump_model(model):
    """
    Serializes a model; ``parse_model(dump_model(m)) == m``

    Args:
        model (ModelSpec): model to write

    Returns:
        str: file contents ending with a newline
    """
    out = ["model", "zchains {}".format(model.zchains)]
    for pos in range(1, model.num_chains):
        out.append("zchain {} at-cut {}".format(model.chain_label(pos), pos))
    for lc in model.loose:
        out.append("loose g{} at {} succ {}".format(
            lc.name, format_position(model, lc.generator),
            format_position(model, lc.succ)))
    return "\n".join(out) + "\n"


def load_model(path):
    logger.info("Loading model file: '{}'".format(path))
    try:
        with open(path) as fobj:
            return parse_model(fobj.read())
    except OSError as e:
        raise ModelFileError("Cannot open '{}': {}".format(path, e.strerror))


def save_model(model, path):
    logger.info("Saving model file: '{}'".format(path))
    with open(path, mode="w") as fobj:
        fobj.write(dump_model(model))


def resolve_model(name_or_path):
    """
    Looks up a preset by name, otherwise loads a model file

    Args:
        name_or_path (str): preset name or file path; None means prime

    Returns:
        ModelSpec
    """
    if name_or_path is None:
        return PRESETS["prime"]
    if name_or_path in PRESETS:
        return PRESETS[name_or_path]
    if not os.path.exists(name_or_path):
        raise ModelFileError("No preset or file named '{}'".format(
            name_or_path))
    return load_model(name_or_path)
