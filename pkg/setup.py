from setuptools import setup, find_namespace_packages

setup(
    name='walk_partitions',
    version='1',
    description='Package for factorizing walks on directed graphs, partitioning them into '
                'classes of irreducible walks and resumming weighted walk sums.',
    license='MIT',
    packages=find_namespace_packages(include=['walk_partitions*']),
    python_requires='>=3.9',
    install_requires=['pydantic>=2', 'tabulate', 'numpy', 'scipy', 'networkx'],
    extras_require={'test': ['pytest>=7', 'hypothesis']},
    entry_points={'console_scripts': ['walk-partitions = walk_partitions.cli:main']}
)
