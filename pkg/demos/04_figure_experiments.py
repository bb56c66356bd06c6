"""
Transforming step signals
=========================

Forward transform, exact recovery, and where the transform peaks for the
four step-like inputs.
"""

# %%
from nthilbert import FigureId, find_peaks, preset, run_transform

for fig in FigureId:
    p = preset(fig)
    run = run_transform(list(p.samples))
    report = find_peaks(run.output, source=run.input)
    print(f"{fig.value}: input       {list(p.samples)}")
    print(f"      transformed {run.output}")
    print(f"      residual={run.residual}  {report.to_text()}")
    if p.provenance_note != "verbatim caption":
        print(f"      note: {p.provenance_note}")

# %%
# Reduced mod 16, the output no longer determines the input.
from nthilbert import ReductionMode

run = run_transform(list(preset("fig2").samples), mode=ReductionMode.MOD_M)
print("mod-16 output:", run.output, "residual after rational inverse:", run.residual)
