from .codec.ratcodec import compare, decode, encode
from .factory import create_codec_from_config, create_engine_from_config, load_config
