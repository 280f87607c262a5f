"""
pandas tables for command-line output: one row per piece, region or
property, rendered as fixed text lines or as json lines.
"""
import logging
from collections import OrderedDict

import pandas as pd

from pdgcalc.chifn.regions import format_region

logger = logging.getLogger(__name__)


def make_piece_row(model, region, function):
    return pd.Series(OrderedDict([
        ("region", format_region(model, region)),
        ("function", str(function)),
    ]))


def make_piecewise_table(P):
    """
    Args:
        P (PiecewiseChiFunction): function to list

    Returns:
        pd.DataFrame: columns ``region`` and ``function``, in point order
    """
    rows = [make_piece_row(P.model, region, F) for region, F in P.pieces]
    return pd.DataFrame(rows, columns=["region", "function"])


def make_set_table(S):
    """
    Args:
        S (SetNormalForm): set to list

    Returns:
        pd.DataFrame: columns ``region`` and ``size``, size None when
            infinite
    """
    rows = [OrderedDict([("region", format_region(S.model, region)),
                         ("size", region.size)])
            for region in S.items]
    return pd.DataFrame(rows, columns=["region", "size"], dtype=object)


def make_record_table(**fields):
    """A one-row table for a single result"""
    return pd.DataFrame([OrderedDict(fields)])


def render_table(df, json=False, sep=": "):
    """
    Args:
        df (pd.DataFrame): table to print
        json (bool): json lines instead of text
        sep (str): column separator of the text form

    Returns:
        str
    """
    if json:
        return df.to_json(orient="records", lines=True).rstrip("\n")
    return "\n".join(sep.join("" if pd.isnull(v) else str(v) for v in row)
                     for row in df.itertuples(index=False))
