"""
计算模块
图结构、独立集多项式、各类界、采样、随机图与扫描
"""
