"""Build script.

The windowed weight-ratio scan has a Cython implementation for speed.  If
Cython or a C compiler is unavailable the build degrades gracefully: the
package installs without the extension and falls back to the numpy kernels
at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("pwcis._scan_cy", ["src/pwcis/_scan_cy.pyx"])],
        language_level=3,
    )
except Exception:
    extensions = []

setup(ext_modules=extensions)
