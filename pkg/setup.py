# -*- coding: utf-8 -*-
__author__ = 'mayanqiong'

import setuptools

with open("README.md", mode="r", encoding='utf-8') as fh:
    long_description = fh.read()

about = {}
with open("qdkit/__version__.py", mode="r", encoding='utf-8') as fh:
    exec(fh.read(), about)

setuptools.setup(
    name='qdkit',
    version=about["__version__"],
    description='Quartet distance and 4-cycle counting toolkit',
    author='qdkit',
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["qdkit.test"]),
    zip_safe=False,
    python_requires='>=3.7',
    install_requires=["numpy", "pandas>=1.1.0", "scipy", "simplejson", "psutil", "shinny_structlog"],
    extras_require={"test": ["pytest"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
    ],
    include_package_data=True
)
