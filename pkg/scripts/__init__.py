"""
脚本模块
命令行入口与语料导出
"""
