from setuptools import setup, find_packages

setup(
    name="skew-dga-tool",
    version="0.1.0",
    description="Truncated DG algebra computations over quotients of skew polynomial rings",
    packages=find_packages(exclude=["examples", "examples.*"]),
    install_requires=[
        "sympy>=1.12",
        "pydantic>=2.11.0",
        "rich>=13.7.1",
        "python-dotenv>=1.0.0",
    ],
    entry_points={"console_scripts": ["skew-dga=skew_dga_tool.main:main"]},
    python_requires=">=3.10",
)
