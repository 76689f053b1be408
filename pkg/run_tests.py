#!/usr/bin/env python3
"""Run the cospec test suite.

Usage:
    ./run_tests.py            # quick suite, slow tests deselected
    ./run_tests.py --all      # include slow enumerations
    ./run_tests.py --frontier # also the long double-star checks
"""

import os
import sys

os.environ['PYTEST_DISABLE_PLUGIN_AUTOLOAD'] = '1'

import pytest  # noqa: E402

if __name__ == '__main__':
    extra = sys.argv[1:]
    args = ['tests/', '-v', '-p', 'no:langsmith', '--tb=short']
    if '--frontier' in extra:
        extra.remove('--frontier')
        os.environ['COSPEC_FRONTIER'] = '1'
    elif '--all' in extra:
        extra.remove('--all')
    else:
        args += ['-m', 'not slow']
    sys.exit(pytest.main(args + extra))
