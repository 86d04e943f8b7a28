from setuptools import setup


setup(**{
    'name': 'python-blocktomo',
    'version': '0.1.0',
    'author': 'python-blocktomo contributors',
    'description': (
        'python-blocktomo reconstructs binary matrices from row and column '
        'sums under block, window and pattern constraints.'),
    'license': 'GPLv3',
    'keywords': 'discrete tomography reconstruction binary matrix tomoctl',
    'packages': [
        'blocktomo',
        'blocktomo.parsers',
    ],
    'scripts': ['tomoctl'],
    'long_description': '',
    'classifiers': [
        'Development Status :: 3 - Alpha',
        'Programming Language :: Python :: 3',
        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    'install_requires': [
        'numpy >= 1.17',
    ],
    'extras_require': {
        'test': ['pytest', 'hypothesis'],
    },
})
