# gwistor
# Copyright (c) 2026 The gwistor developers
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
from setuptools import setup, find_packages

SCRIPT_DIR = os.path.dirname(os.path.realpath(__file__))

readme_path = os.path.join(SCRIPT_DIR, "README.md")
with open(readme_path, mode='r', encoding='utf-8') as f:
    readme = f.read()

# Read the version without importing the package.
version = {}
with open(os.path.join(SCRIPT_DIR, "gwistor", "_version.py"), mode='r', encoding='utf-8') as f:
    exec(f.read(), version)

setup(
    name="gwistor",
    version=version['version'],
    description="Exact symbolic verification of the G2 structure on the gwistor space",
    long_description=readme,
    long_description_content_type='text/markdown',
    author="The gwistor developers",
    license="Apache 2.0",
    python_requires=">=3.6",
    install_requires = [
        'colorama',
        'prettytable',
        'pyyaml>=5.1,<7.0',
        'sympy>=1.5',
        ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.6",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={
        'console_scripts': [
            'gwistor = gwistor.__main__:main',
        ],
    },
    packages=find_packages(exclude=['test', 'test.*', 'examples', 'examples.*']),
    package_data={
        'gwistor': ['frame/data/*.txt'],
    },
    zip_safe=False,
)
