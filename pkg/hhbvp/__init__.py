# -*- coding: utf-8 -*-

"""Top-level package for hilfer-hadamard-bvp."""

__author__ = """hhbvp developers"""
__email__ = 'hhbvp@users.noreply.github.com'
__version__ = '0.1.0'
