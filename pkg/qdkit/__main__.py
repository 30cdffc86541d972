#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import sys

from qdkit.cli import main

sys.exit(main())
