"""Bialynicki-Birula flow graphs, semi-sections and proper quotients."""

from ._bbflow import *  # noqa: F401,F403
from ._bbflow import BBFlowError, FlowGraph, SemiSection  # noqa: F401
