"""Readers, writers and the structural differ."""

from mvc2gen.modelio.diff import Difference, ModelDiff, diff_psm
from mvc2gen.modelio.dsl import parse_pim_dsl
from mvc2gen.modelio.pimxmi import dump_pim_xmi, load_pim_xmi, parse_pim_xmi, write_pim_xmi
from mvc2gen.modelio.psmxmi import dump_psm_xmi, load_psm_xmi, parse_psm_xmi, write_psm_xmi
from mvc2gen.modelio.xmltree import XmiDocument, parse_xml, render

__all__ = [
    "Difference",
    "ModelDiff",
    "XmiDocument",
    "diff_psm",
    "dump_pim_xmi",
    "dump_psm_xmi",
    "load_pim_xmi",
    "load_psm_xmi",
    "parse_pim_dsl",
    "parse_pim_xmi",
    "parse_psm_xmi",
    "parse_xml",
    "render",
    "write_pim_xmi",
    "write_psm_xmi",
]
