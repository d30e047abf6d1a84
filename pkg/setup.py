import setuptools

with open("README.md") as f:
    long_desc = f.read()

setuptools.setup(name="overtop",
                 version="0.0.1",
                 description="Overlapped-polynomial degree reduction and the ellipse-in-right-"
                             "triangle tangency problem in exact and arbitrary precision",
                 long_description=long_desc,
                 long_description_content_type="text/markdown",
                 package_dir={"":"src"},
                 packages=setuptools.find_packages("src"),
                 install_requires=["yacs", "mpmath", "numpy", "matplotlib", "tqdm"],
                 extras_require={"test": ["pytest", "hypothesis", "sympy"]},
                 entry_points={"console_scripts": ["overtop = overtop.cli:main"]},
                 classifiers=["Development Status :: 3 - Alpha",
                              "Programming Language :: Python :: 3",
                              "License :: OSI Approved :: MIT License",
                              "Operating System :: OS Independent"],
                 python_requires=">=3.7")
