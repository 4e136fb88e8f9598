# -*- coding: utf-8 -*-
# SPDX-License-Identifier: Apache-2.0
"""Packaging of the power contamination engine"""
import pathlib

from setuptools import find_packages, setup

ROOT = pathlib.Path(__file__).parent


def read_requirements(name: str):
    return [line.strip() for line in (ROOT / name).read_text(encoding='utf-8').splitlines()
            if line.strip() and not line.startswith('#')]


setup(
    name='contagrid',
    version='0.1',
    description='Power contamination on rectangular grids: contamination numbers, optimal and feasible sets',
    long_description=(ROOT / 'README.md').read_text(encoding='utf-8'),
    long_description_content_type='text/markdown',
    license='Apache-2.0',
    python_requires='>=3.8',
    packages=find_packages(include=['contagrid', 'contagrid.*']),
    py_modules=['power_contamination'],
    install_requires=read_requirements('requirements.txt'),
    extras_require={'dev': read_requirements('requirements_dev.txt')},
)
