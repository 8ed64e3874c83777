from _lplab import *  # noqa: F401,F403
