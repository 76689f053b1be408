"""Root conftest.py: loaded first, before any plugin autoload."""

import os

# Third-party plugins in shared environments break --strict-markers runs
os.environ['PYTEST_DISABLE_PLUGIN_AUTOLOAD'] = '1'
