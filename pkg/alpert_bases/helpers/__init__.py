"""Algorithms as plain functions over the models.

Submodules are imported explicitly (``from alpert_bases.helpers import spaces``);
models import some of them lazily, so this package stays empty.
"""
