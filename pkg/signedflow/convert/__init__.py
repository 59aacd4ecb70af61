from .verify import verify_flow
from .engine import ConversionState, z6_to_six_flow
from .pipeline import six_flow_pipeline, check_pipeline_input
