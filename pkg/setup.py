import setuptools

with open('README.md', 'r') as fh:
    long_description = fh.read()

setuptools.setup(
    name='python-alpert-bases',
    version='1.0.0',
    description='Alpert wavelet bases, exact dimensions and vanishing ideals for L2(mu)',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='MIT',
    packages=setuptools.find_packages(exclude=['tests', 'tests.*', 'examples', 'examples.*']),
    install_requires=['setuptools', 'sympy', 'numpy'],
    extras_require={'test': ['pytest']},
    entry_points={'console_scripts': ['alpert-bases=alpert_bases.cli:main']},
    classifiers=[
        'Programming Language :: Python',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.8',
)
