# 作者：Xiaoqiang
# 微信公众号：XiaoqiangClub
# 创建时间：2026-10-19T09:46:27.713Z
# 文件描述：文件读写与规范 JSON：读取失败统一转成 FileAccessError，写入走临时文件加 os.replace
# 文件路径：xqcbordarange/core/utils.py

import json
import os
import tempfile
from typing import Any, Union

import aiofiles

from .exceptions import FileAccessError


PathLike = Union[str, "os.PathLike[str]"]


def _access_error(file_path: PathLike, error: Exception) -> FileAccessError:
    if isinstance(error, FileNotFoundError):
        return FileAccessError(f"❌ 文件未找到: {os.fspath(file_path)}")
    return FileAccessError(f"❌ 读取 {os.fspath(file_path)} 失败: {error}")


def read_file(file_path: PathLike, encoding: str = "utf-8") -> str:
    """
    读取整个文本文件，偏好组合文件和见证缓存都经由这里。

    :param file_path: 文件路径。
    :param encoding: 文件编码。
    :return: 文件内容。
    """
    try:
        with open(file_path, "r", encoding=encoding) as f:
            return f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise _access_error(file_path, e)


async def read_file_async(file_path: PathLike, encoding: str = "utf-8") -> str:
    """read_file 的 aiofiles 版本。"""
    try:
        async with aiofiles.open(file_path, "r", encoding=encoding) as f:
            return await f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise _access_error(file_path, e)



def write_file_atomic(file_path: str, content: str, encoding: str = "utf-8") -> None:
    """
    原子写入文件：先写临时文件，再用 os.replace 替换目标文件。

    :param file_path: 目标文件路径。
    :param content: 写入的内容。
    :param encoding: 文件编码，默认为 'utf-8'。
    """
    directory = os.path.dirname(os.path.abspath(file_path))
    try:
        os.makedirs(directory, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(prefix=".tmp-", dir=directory)
        try:
            with os.fdopen(fd, "w", encoding=encoding) as f:
                f.write(content)
            os.replace(tmp_path, file_path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise
    except OSError as e:
        raise FileAccessError(f"❌ 写入文件时发生错误: {e}")


def canonical_json(data: Any) -> str:
    """
    生成规范 JSON 文本：键排序、紧凑分隔符，同一数据总是得到同一字节串。

    :param data: 只含整数、字符串、列表和字典的数据。
    :return: JSON 字符串。
    """
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
