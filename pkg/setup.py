from pathlib import Path

from setuptools import find_packages, setup


def _requirements():
    lines = Path(__file__).with_name('requirements.txt').read_text().splitlines()
    return [line.strip() for line in lines if line.strip() and not line.startswith('#')]


setup(
    name='lsfts',
    version='1.0.0',
    packages=find_packages(include=['lsfts', 'lsfts.*']),
    package_data={'lsfts.bench': ['experiments.json']},
    python_requires='>=3.9',
    install_requires=_requirements(),
    py_modules=['main'],
    entry_points={'console_scripts': ['lsfts = main:main']},
)
