#!/usr/bin/env python
#  -*- coding: utf-8 -*-
__author__ = 'mayanqiong'
