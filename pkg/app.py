# app.py
import streamlit as st
from dotenv import load_dotenv

load_dotenv()

from lattice_spectra import spectra  # noqa: E402
from lattice_spectra.config import settings  # noqa: E402
from lattice_spectra.errors import SpectraError  # noqa: E402
from lattice_spectra.records import ClassificationRecord, SampleRecord, TorusFormRecord  # noqa: E402


@st.cache_data(show_spinner=False)
def _sample(rcos: str, rsq: str, n_max: int, box: int) -> dict:
    spec = spectra.TorusSpec.parse(rcos, rsq)
    s = spectra.multiplicity_set_sample(spec, n_max if spec.is_rational else None, box)
    return SampleRecord.from_sample(s).model_dump()


# --------------------------------------------------------------------
# Streamlit UI
# --------------------------------------------------------------------
st.set_page_config(page_title="Lattice Spectra", page_icon="📐", layout="wide")

st.title("📐 Lattice Spectra")

with st.sidebar:
    st.markdown("### Domain")
    domain = st.radio("Shape", ["Torus", "Rectangle"], index=0)
    if domain == "Torus":
        rcos = st.text_input("r cos(t)", value="1/2", help="exact value, e.g. 1/2 or 1/2*sqrt(2)")
        rsq = st.text_input("r^2", value="1", help="exact value, e.g. 3 or 2+sqrt(2)")
        n_max = st.number_input("Levels up to (rational tori)", min_value=1, value=200, step=50)
        box = st.number_input("Box half-width (irrational tori)", min_value=1, value=min(settings.BOX, 8), step=1)
    else:
        ratio_sq = st.text_input("(a/b)^2", value="1", help="exact value, e.g. 5 or sqrt(2)")
        k = st.number_input("Target multiplicity", min_value=1, max_value=4, value=2, step=1)

    st.markdown("---")
    show_debug = st.checkbox("Show debugging", value=False)

go = st.button("Classify", type="primary")

if go:
    try:
        with st.spinner("Counting lattice points..."):
            if domain == "Torus":
                spec = spectra.TorusSpec.parse(rcos, rsq)
                ms = spectra.torus_classify(spec)
                sample = _sample(rcos, rsq, int(n_max), int(box))
                form = TorusFormRecord.from_data(spectra.torus_form(spec)) if spec.is_rational else None
            else:
                rspec = spectra.RectangleSpec.parse(ratio_sq)
                ms = spectra.rect_classify(rspec)
                rw = spectra.rect_witness(rspec, int(k)) if rspec.rational_pair is not None else None
    except SpectraError as e:
        st.error(f"Input error: {e}")
        st.stop()

    record = ClassificationRecord.from_set(ms)
    st.markdown("### Multiplicity set")
    st.metric("M", record.set)
    st.caption(record.case)
    if ms.statement_reading is not None and not ms.statement_reading.consistent:
        st.warning(
            f"Reading rcos = {ms.statement_reading.alpha}*r^2 + {ms.statement_reading.beta} "
            f"would give {ms.statement_reading.tag.value}."
        )

    if domain == "Torus":
        st.markdown("### Observed multiplicities")
        st.write(", ".join(sample["observed"]) + f" over {sample['levels']} levels")
        if form is not None:
            st.write(f"Integer form: ({form.form.a}, {form.form.b}, {form.form.c}), discriminant {form.discriminant.delta}")
    elif rw is not None:
        st.markdown(f"### Eigenvalue of multiplicity {int(k)}")
        st.write(rw.eigenvalue_text())
        st.write(", ".join(f"({m},{n})" for m, n in rw.witness.solutions))

    if show_debug:
        with st.expander("Debug record", expanded=False):
            st.json(record.model_dump(exclude_none=True))
            if domain == "Torus":
                st.json(sample)

else:
    st.info("Pick a shape in the sidebar and click **Classify**.")
