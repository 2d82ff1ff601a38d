from setuptools import setup, find_packages
import os

# warn user if setup.py is run from a different directory
dir_of_file = os.path.dirname(__file__)
cwd = os.getcwd()
if dir_of_file and os.path.abspath(dir_of_file) != cwd:
    print(f"WARNING: setup.py is being run from a different directory than the install script. Package data may be "
          f"missing. Current directory='{cwd}', dir of file='{dir_of_file}'")

install_requires_packages = [
          'numpy==1.24.3',
          'scipy==1.10.1',
          'matplotlib==3.7.1',
          'tabulate==0.9.0',
          'more_itertools==9.1.0',
          'pytest==7.3.1'
]

kwargs = {
    'name': 'fracvuln',
    'version': '0.1.0',
    'include_package_data': True,
    'package_data': {'fracvuln': ['data/config/*.json', 'data/graphs/*.txt']},
    'install_requires': install_requires_packages,
    'packages': find_packages(exclude=['tests', 'tests.*']),
    'entry_points': {'console_scripts': ['fracvuln=fracvuln.cli.main:main']},
    'zip_safe': False
}

setup(**kwargs)
