# Schemas 模块：分析对象文档（dsr-subject/1）与报告（dsr-report/1）
