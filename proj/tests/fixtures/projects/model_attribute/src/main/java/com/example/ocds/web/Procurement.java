package com.example.ocds.web;

public class Procurement {
    private String id;
    private double amount;
}
